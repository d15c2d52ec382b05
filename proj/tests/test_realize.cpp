#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unitring/errors.hpp"
#include "unitring/oracle.hpp"
#include "unitring/realize.hpp"

using namespace unitring;

namespace {

u128 certified_product(const OddCertificate& c) {
  u128 p = 1;
  for (unsigned n : c.exponents) p *= mersenne(n);
  return p;
}

}  // namespace

TEST(OddDecomposition, SpotValues) {
  for (std::uint64_t k : {1ULL, 3ULL, 7ULL, 9ULL, 15ULL, 21ULL}) {
    EXPECT_TRUE(odd_product_decomposition(k).has_value()) << k;
  }
  for (std::uint64_t k : {5ULL, 11ULL, 13ULL, 35ULL}) {
    EXPECT_FALSE(odd_product_decomposition(k).has_value()) << k;
  }
  EXPECT_EQ(odd_product_decomposition(1)->exponents, std::vector<unsigned>{});
  EXPECT_EQ(odd_product_decomposition(21)->exponents, (std::vector<unsigned>{3, 2}));
  // 63 = 2^6 - 1 = 7 * 9: the single factor is lexicographically largest.
  EXPECT_EQ(odd_product_decomposition(63)->exponents, (std::vector<unsigned>{6}));
  EXPECT_THROW(odd_product_decomposition(0), DomainError);
  EXPECT_THROW(odd_product_decomposition(8), DomainError);
}

TEST(OddDecomposition, CertificatesAreSoundAndNonincreasing) {
  const auto reach = oracle::odd_realizable_sieve(1 << 16);
  for (std::uint64_t k = 1; k < (1 << 16); k += 2) {
    const auto c = odd_product_decomposition(k);
    ASSERT_EQ(c.has_value(), reach[k]) << k;
    if (!c) continue;
    ASSERT_EQ(certified_product(*c), k);
    for (std::size_t i = 0; i < c->exponents.size(); ++i) {
      ASSERT_GE(c->exponents[i], 2U);
      if (i > 0) ASSERT_GE(c->exponents[i - 1], c->exponents[i]);
    }
  }
}

TEST(OddDecomposition, Large64BitInputs) {
  const auto k = static_cast<std::uint64_t>(mersenne(61));
  EXPECT_EQ(odd_product_decomposition(k)->exponents, std::vector<unsigned>{61});
  const std::uint64_t prod = static_cast<std::uint64_t>(mersenne(31) * mersenne(17) * mersenne(5));
  const auto c = odd_product_decomposition(prod);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(certified_product(*c), prod);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t odd = rng() | 1;
    if (const auto cert = odd_product_decomposition(odd)) ASSERT_EQ(certified_product(*cert), odd);
  }
}

TEST(OddDecomposition, ClosedUnderProducts) {
  std::mt19937_64 rng(23);
  const auto reach = oracle::odd_realizable_sieve(1 << 12);
  std::vector<std::uint64_t> realizable;
  for (std::uint64_t k = 1; k < reach.size(); k += 2) {
    if (reach[k]) realizable.push_back(k);
  }
  for (int i = 0; i < 2000; ++i) {
    const auto a = realizable[rng() % realizable.size()];
    const auto b = realizable[rng() % realizable.size()];
    ASSERT_TRUE(odd_product_decomposition(a * b).has_value()) << a << " * " << b;
  }
}

TEST(RealizeCardinal, AllBranches) {
  const auto zero = realize_cardinal(FiniteCardinal{0});
  EXPECT_FALSE(zero.realizable);
  EXPECT_FALSE(zero.reason.empty());

  const auto even = realize_cardinal(FiniteCardinal{14});
  EXPECT_TRUE(even.realizable);
  EXPECT_EQ(std::get<EvenUnitRing>(*even.witness).m, 7U);

  const auto one = realize_cardinal(FiniteCardinal{1});
  EXPECT_EQ(std::get<ProductOfFields>(*one.witness).degrees, std::vector<unsigned>{1});
  EXPECT_EQ(one.certificate->exponents, std::vector<unsigned>{});

  const auto odd = realize_cardinal(FiniteCardinal{21});
  EXPECT_EQ(std::get<ProductOfFields>(*odd.witness).degrees, (std::vector<unsigned>{3, 2}));

  const auto no = realize_cardinal(FiniteCardinal{5});
  EXPECT_FALSE(no.realizable);
  EXPECT_FALSE(no.witness.has_value());
  EXPECT_FALSE(no.reason.empty());

  const auto inf = realize_cardinal(InfiniteCardinal{"aleph_2"});
  EXPECT_TRUE(inf.realizable);
  EXPECT_EQ(std::get<RationalFunctionField>(*inf.witness).cardinal_label, "aleph_2");

  const auto big = realize_cardinal(FiniteCardinal{UINT64_MAX - 1});
  EXPECT_TRUE(big.realizable);
}

TEST(RealizeCardinal, EvenWitnessesAgreeWithEnumeration) {
  for (std::uint64_t k = 2; k <= 200; k += 2) {
    const auto answer = realize_cardinal(FiniteCardinal{k});
    ASSERT_TRUE(answer.realizable);
    const auto& ring = std::get<EvenUnitRing>(*answer.witness);
    ASSERT_EQ(ring.m, k / 2);
    ASSERT_EQ(r2m_unit_survey(ring.m).count, k);
  }
}

TEST(Witness, ValidationAndDescription) {
  EXPECT_THROW(validate_witness(ProductOfFields{{}}), DomainError);
  EXPECT_THROW(validate_witness(ProductOfFields{{2, 0}}), DomainError);
  EXPECT_THROW(validate_witness(EvenUnitRing{0}), DomainError);
  EXPECT_THROW(validate_witness(RationalFunctionField{""}), DomainError);
  EXPECT_EQ(describe(ProductOfFields{{3, 2}}), "GF(2^3) x GF(2^2)");
  EXPECT_EQ(describe(EvenUnitRing{7}), "Z[x]/(x^2, 7x)");
}

TEST(RealizeGroup, Examples) {
  EXPECT_EQ(realize_group_odd(parse_group("C3 x C3"))->degrees, (std::vector<unsigned>{2, 2}));
  EXPECT_FALSE(realize_group_odd(parse_group("C9")).has_value());
  EXPECT_EQ(realize_group_odd(parse_group("C21"))->degrees, (std::vector<unsigned>{3, 2}));
  EXPECT_EQ(realize_group_odd(AbelianGroup())->degrees, std::vector<unsigned>{1});
  // GF(64) has cyclic unit group C_63 = C_7 x C_9; C_3 x C_3 x C_7 has the
  // same order but needs three factors.
  EXPECT_EQ(realize_group_odd(parse_group("C63"))->degrees, std::vector<unsigned>{6});
  EXPECT_EQ(realize_group_odd(parse_group("C7 x C9"))->degrees, std::vector<unsigned>{6});
  EXPECT_FALSE(realize_group_odd(parse_group("C9 x C9")).has_value());
  EXPECT_EQ(realize_group_odd(parse_group("C3 x C3 x C7"))->degrees,
            (std::vector<unsigned>{3, 2, 2}));
  EXPECT_THROW(realize_group_odd(parse_group("C6")), DomainError);
}

TEST(RealizeGroup, WitnessUnitGroupIsIsomorphic) {
  for (std::uint64_t n = 1; n <= 999; n += 2) {
    for (const auto& g : groups_of_order(n)) {
      const auto w = realize_group_odd(g);
      if (w) ASSERT_TRUE(iso_test(units_of_field_product(w->degrees), g)) << g.to_string();
    }
  }
}

TEST(RealizePGroup, MersennePrimesOnlyElementary) {
  EXPECT_EQ(realize_p_group(7, AbelianGroup::elementary(7, 3))->degrees,
            (std::vector<unsigned>{3, 3, 3}));
  EXPECT_FALSE(realize_p_group(7, parse_group("C49")).has_value());
  EXPECT_FALSE(realize_p_group(5, parse_group("C5")).has_value());
  EXPECT_EQ(realize_p_group(5, AbelianGroup())->degrees, std::vector<unsigned>{1});
  EXPECT_THROW(realize_p_group(2, parse_group("C4")), DomainError);
  EXPECT_THROW(realize_p_group(9, parse_group("C9")), DomainError);
  EXPECT_THROW(realize_p_group(3, parse_group("C5")), DomainError);
}

TEST(MersennePowers, NoPerfectPowers) {
  EXPECT_TRUE(mersenne_power_check(63));
  EXPECT_TRUE(mersenne_power_check(2));
  EXPECT_THROW(mersenne_power_check(1), DomainError);
  EXPECT_THROW(mersenne_power_check(64), DomainError);
}

TEST(SRing, DegreesMatchCyclotomicOracleForCyclicGroups) {
  for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 9ULL, 25ULL, 27ULL, 121ULL, 243ULL}) {
    const std::uint64_t orders[] = {q};
    const auto counts = s_ring_degrees(AbelianGroup::from_cyclic_orders(orders));
    std::vector<unsigned> expanded = expand_degrees(counts);
    std::sort(expanded.begin(), expanded.end());
    EXPECT_EQ(expanded, oracle::cyclotomic_degrees(q)) << q;
    EXPECT_EQ(total_dimension(counts), q);
  }
}

TEST(SRing, DimensionIdentityAndGuards) {
  for (std::uint64_t n = 1; n <= 801; n += 2) {
    for (const auto& g : groups_of_order(n)) {
      ASSERT_EQ(total_dimension(s_ring_degrees(g)), n) << g.to_string();
    }
  }
  EXPECT_EQ(s_ring_degrees(AbelianGroup()), (DegreeCounts{{1, 1}}));
  EXPECT_THROW(s_ring_degrees(parse_group("C2")), DomainError);
  EXPECT_THROW(s_ring_degrees(AbelianGroup::elementary(3, 13)), ResourceError);
}

TEST(SRing, SubsetSearchAgreesWithDirectDecider) {
  for (std::uint64_t n = 1; n <= 300; n += 2) {
    for (const auto& g : groups_of_order(n)) {
      const auto direct = realize_group_odd(g);
      const auto subset = s_ring_subset_search(g);
      ASSERT_EQ(direct.has_value(), subset.has_value()) << g.to_string();
      if (subset) {
        ASSERT_TRUE(iso_test(units_of_field_product(*subset), g)) << g.to_string();
      }
    }
  }
}
