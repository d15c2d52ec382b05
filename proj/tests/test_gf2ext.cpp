#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unitring/errors.hpp"
#include "unitring/gf2ext.hpp"

using namespace unitring;

TEST(FieldCtx, ModulusIsSmallestIrreducible) {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto ctx = FieldCtx::make(n);
    EXPECT_EQ(ctx->modulus().words()[0], oracle::smallest_irreducible(static_cast<int>(n)))
        << "n = " << n;
  }
  EXPECT_EQ(FieldCtx::make(8)->modulus().to_hex(), "0x11b");
}

TEST(FieldCtx, DegreeGuards) {
  EXPECT_THROW(FieldCtx::make(0), DomainError);
  EXPECT_THROW(FieldCtx::make(kMaxFieldDegree + 1), ResourceError);
  EXPECT_NO_THROW(FieldCtx::make(kMaxFieldDegree));
}

TEST(FieldCtx, MultiplicationMatchesShiftAndAdd) {
  std::mt19937_64 rng(7);
  for (unsigned n : {1U, 2U, 3U, 7U, 13U, 31U, 32U}) {
    const auto ctx = FieldCtx::make(n);
    const std::uint64_t m = ctx->modulus().words()[0];
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t a = rng() & ctx->size_minus_one();
      const std::uint64_t b = rng() & ctx->size_minus_one();
      ASSERT_EQ(ctx->mul(a, b), oracle::field_mul(a, b, m));
    }
  }
}

TEST(FieldCtx, FieldAxiomsExhaustiveSmall) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto ctx = FieldCtx::make(n);
    const std::uint64_t size = ctx->size_minus_one() + 1;
    for (std::uint64_t a = 0; a < size; ++a) {
      if (a != 0) {
        ASSERT_EQ(ctx->mul(a, ctx->inv(a)), 1U);
        ASSERT_EQ(ctx->pow(a, ctx->size_minus_one()), 1U);
      }
      ASSERT_EQ(ctx->sqr(ctx->sqrt(a)), a);
      for (std::uint64_t b = 0; b < size; ++b) {
        ASSERT_EQ(ctx->mul(a, b), ctx->mul(b, a));
        for (std::uint64_t c = 0; c < size; c += 3) {
          ASSERT_EQ(ctx->mul(ctx->mul(a, b), c), ctx->mul(a, ctx->mul(b, c)));
          ASSERT_EQ(ctx->mul(a, b ^ c), ctx->mul(a, b) ^ ctx->mul(a, c));
        }
      }
    }
  }
}

TEST(FieldElem, InverseOfZeroAndContextMismatch) {
  const auto f4 = FieldCtx::make(2);
  const auto f8 = FieldCtx::make(3);
  EXPECT_THROW(FieldElem::zero(f4).inv(), DomainError);
  EXPECT_THROW(FieldElem(f4, 4), UsageError);
  EXPECT_THROW(FieldElem::one(f4) + FieldElem::one(f8), UsageError);
  EXPECT_THROW(FieldElem::one(f4) * FieldElem::one(f8), UsageError);
  EXPECT_EQ(FieldElem(f4, 3).to_string(), "0x3@GF(2^2)");
}

TEST(FieldElem, MultiplicativeOrderMatchesBruteForce) {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto ctx = FieldCtx::make(n);
    for (std::uint64_t a = 1; a <= ctx->size_minus_one(); ++a) {
      std::uint64_t t = 1;
      std::uint64_t v = a;
      while (v != 1) {
        v = oracle::field_mul(v, a, ctx->modulus().words()[0]);
        ++t;
      }
      ASSERT_EQ(multiplicative_order(FieldElem(ctx, a)), t);
    }
  }
}

TEST(FieldElem, GeneratorOrderDividesGroupOrder) {
  for (unsigned n = 1; n <= 32; ++n) {
    const auto ctx = FieldCtx::make(n);
    const auto g = FieldElem::generator(ctx);
    EXPECT_EQ(ctx->size_minus_one() % multiplicative_order(g), 0U);
    EXPECT_TRUE(g.pow(ctx->size_minus_one()) == FieldElem::one(ctx));
  }
}

TEST(PolyExt, FactorOverExtensionRoundTrip) {
  std::mt19937_64 rng(11);
  for (unsigned n : {2U, 3U, 4U, 5U}) {
    const auto ctx = FieldCtx::make(n);
    for (int i = 0; i < 60; ++i) {
      std::vector<std::uint64_t> c(1 + rng() % 12);
      for (auto& v : c) v = rng() & ctx->size_minus_one();
      c.back() = 1;
      const PolyExt f(ctx, c);
      if (f.degree() < 1) continue;
      PolyExt prod(ctx, {1});
      for (const auto& [g, m] : factor_over_ext(f)) {
        EXPECT_EQ(g.leading(), 1U);
        for (unsigned k = 0; k < m; ++k) prod = mul(prod, g);
      }
      EXPECT_TRUE(prod == f) << f.to_string();
    }
  }
}

TEST(PolyExt, IrreducibleFactorsHaveNoRoots) {
  const auto ctx = FieldCtx::make(3);
  const auto f = PolyExt::lift(ctx, PolyGF2::from_bits((1ULL << 15) | 1));  // x^15 - 1
  for (const auto& [g, m] : factor_over_ext(f)) {
    EXPECT_EQ(m, 1U);
    if (g.degree() == 1) continue;
    for (std::uint64_t a = 0; a <= ctx->size_minus_one(); ++a) {
      std::uint64_t value = 0;
      for (long i = g.degree(); i >= 0; --i) {
        value = ctx->mul(value, a) ^ g.raw()[static_cast<std::size_t>(i)];
      }
      EXPECT_NE(value, 0U);
    }
  }
}

TEST(TensorSplit, ClosedFormAndFactorizationAgree) {
  for (unsigned a = 1; a <= 12; ++a) {
    for (unsigned b = 1; b <= 12; ++b) {
      const auto closed = tensor_split(a, b);
      const unsigned g = std::gcd(a, b);
      EXPECT_EQ(closed, std::vector<unsigned>(g, a * b / g));
      EXPECT_EQ(tensor_split_by_factorization(a, b), closed) << a << " (x) " << b;
      EXPECT_TRUE(tensor_dim_check(a, b));
    }
  }
  EXPECT_THROW(tensor_split(0, 3), DomainError);
  EXPECT_THROW(tensor_split_by_factorization(3, 0), DomainError);
}

TEST(TensorSplit, Symmetric) {
  for (unsigned a = 1; a <= 12; ++a) {
    for (unsigned b = 1; b <= 12; ++b) EXPECT_EQ(tensor_split(a, b), tensor_split(b, a));
  }
}

TEST(FieldCtx, RandomTriplesSatisfyAxioms) {
  std::mt19937_64 rng(13);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto ctx = FieldCtx::make(n);
    for (int i = 0; i < 1000; ++i) {
      const FieldElem a(ctx, rng() & ctx->size_minus_one());
      const FieldElem b(ctx, rng() & ctx->size_minus_one());
      const FieldElem c(ctx, rng() & ctx->size_minus_one());
      ASSERT_TRUE((a * b) * c == a * (b * c));
      ASSERT_TRUE(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) ASSERT_TRUE(a * a.inv() == FieldElem::one(ctx));
    }
  }
}

TEST(FieldElem, SomeElementGeneratesTheUnitGroup) {
  for (unsigned n = 1; n <= 16; ++n) {
    const auto ctx = FieldCtx::make(n);
    bool found = false;
    for (std::uint64_t a = 1; a <= ctx->size_minus_one() && !found; ++a) {
      found = multiplicative_order(FieldElem(ctx, a)) == ctx->size_minus_one();
    }
    EXPECT_TRUE(found) << "n = " << n;
  }
}
