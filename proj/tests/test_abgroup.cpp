#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unitring/abgroup.hpp"
#include "unitring/errors.hpp"

using namespace unitring;

namespace {

OrderStatistics brute_stats(const std::vector<std::uint64_t>& orders) {
  const auto m = oracle::product_order_stats(orders);
  return {m.begin(), m.end()};
}

}  // namespace

TEST(IntegerFactor, MatchesTrialDivisionUpToOneMillion) {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const auto got = factor_integer(n);
    const auto want = oracle::trial_factor_int(n);
    ASSERT_EQ(got.size(), want.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_EQ(got[i].prime, want[i].first) << n;
      ASSERT_EQ(got[i].exponent, want[i].second) << n;
    }
  }
  EXPECT_THROW(factor_integer(0), DomainError);
}

TEST(IntegerFactor, Random64BitProductsReassemble) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() | 1;
    u128 product = 1;
    for (const auto& [p, e] : factor_integer(n)) {
      ASSERT_TRUE(is_prime(p)) << n;
      for (unsigned k = 0; k < e; ++k) product *= p;
    }
    ASSERT_EQ(product, static_cast<u128>(n));
  }
  // Semiprimes with two ~32-bit factors exercise the rho stage.
  EXPECT_EQ(factor_integer(4294967291ULL * 4294967279ULL),
            (std::vector<PrimePower>{{4294967279ULL, 1}, {4294967291ULL, 1}}));
  EXPECT_EQ(factor_integer(UINT64_MAX),
            (std::vector<PrimePower>{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1},
                                     {6700417, 1}}));
}

TEST(IntegerFactor, PrimalityAgainstSieve) {
  std::vector<bool> composite(200000, false);
  for (std::uint64_t i = 2; i < composite.size(); ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j < composite.size(); j += i) composite[j] = true;
    }
    ASSERT_EQ(is_prime(i), !composite[i]) << i;
  }
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(AbelianGroup, CrtNormalForm) {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    for (std::uint64_t n = 1; n <= 200; n += 7) {
      const std::uint64_t split[] = {m, n};
      const std::uint64_t joined[] = {std::lcm(m, n), std::gcd(m, n)};
      ASSERT_TRUE(iso_test(AbelianGroup::from_cyclic_orders(split),
                           AbelianGroup::from_cyclic_orders(joined)))
          << m << ", " << n;
      if (std::gcd(m, n) == 1) {
        const std::uint64_t mn[] = {m * n};
        ASSERT_EQ(AbelianGroup::from_cyclic_orders(split), AbelianGroup::from_cyclic_orders(mn));
      }
    }
  }
}

TEST(AbelianGroup, BasicQueries) {
  const auto g = parse_group("C3 x C9 x C5");
  EXPECT_EQ(g.to_string(), "C_3 x C_9 x C_5");
  EXPECT_EQ(g.order(), 135U);
  EXPECT_EQ(g.exponent(), 45U);
  EXPECT_EQ(g.primes(), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(g.invariant_factors(), (std::vector<u128>{3, 45}));
  EXPECT_FALSE(g.is_p_group(3));
  EXPECT_TRUE(AbelianGroup::elementary(7, 3).is_elementary_abelian(7));
  EXPECT_FALSE(parse_group("C9").is_elementary_abelian(3));
  EXPECT_EQ(AbelianGroup().to_string(), "C_1");
  EXPECT_EQ(parse_group("C1"), AbelianGroup());
  EXPECT_EQ(parse_group("3,9"), parse_group("C_3 x C_9"));
  EXPECT_EQ(parse_group("C3") * parse_group("C5"), parse_group("C15"));
}

TEST(AbelianGroup, ParseErrorsNameTheToken) {
  try {
    parse_group("C3 x Cz");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("Cz"), std::string::npos);
  }
  EXPECT_THROW(parse_group(""), UsageError);
  EXPECT_THROW(parse_group("C0"), UsageError);
  EXPECT_THROW(parse_group("3,,5"), UsageError);
}

TEST(AbelianGroup, Guards) {
  EXPECT_THROW(AbelianGroup::from_primary({{4, 1}}), DomainError);
  EXPECT_THROW(AbelianGroup::from_primary({{3, 90}}), ResourceError);
  EXPECT_THROW(order_statistics(AbelianGroup::elementary(3, 30)), ResourceError);
}

TEST(AbelianGroup, OrderStatisticsMatchEnumeration) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> orders(1 + rng() % 3);
    for (auto& o : orders) o = 1 + rng() % 40;
    const auto g = AbelianGroup::from_cyclic_orders(orders);
    ASSERT_EQ(order_statistics(g), brute_stats(orders)) << g.to_string();
  }
}

// Order statistics determine a finite abelian group up to isomorphism.
TEST(AbelianGroup, IsoTestAgreesWithOrderStatistics) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto groups = groups_of_order(n);
    std::set<OrderStatistics> seen;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      ASSERT_EQ(groups[i].order(), n);
      seen.insert(order_statistics(groups[i]));
      for (std::size_t j = 0; j < groups.size(); ++j) {
        ASSERT_EQ(iso_test(groups[i], groups[j]), i == j);
      }
    }
    ASSERT_EQ(seen.size(), groups.size()) << n;
  }
}

TEST(AbelianGroup, RandomPairsIsoMatchesOrderStatistics) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    // Same order half the time so that the comparison is not trivial.
    const std::uint64_t n = 1 + rng() % 10000;
    const auto gs = groups_of_order(n);
    const auto hs = (i % 2 == 0) ? gs : groups_of_order(1 + rng() % 10000);
    const auto& g = gs[rng() % gs.size()];
    const auto& h = hs[rng() % hs.size()];
    ASSERT_EQ(iso_test(g, h), order_statistics(g) == order_statistics(h))
        << g.to_string() << " vs " << h.to_string();
  }
}

TEST(AbelianGroup, OrderStatisticsSumToOrder) {
  for (std::uint64_t n = 1; n <= 2000; n += 37) {
    for (const auto& g : groups_of_order(n)) {
      std::uint64_t total = 0;
      for (const auto& [order, count] : order_statistics(g)) total += count;
      ASSERT_EQ(total, n) << g.to_string();
    }
  }
}

TEST(AbelianGroup, GroupsOfOrderCounts) {
  // Number of abelian groups of order p^k is the partition number of k.
  EXPECT_EQ(groups_of_order(1).size(), 1U);
  EXPECT_EQ(groups_of_order(3 * 3 * 3 * 3 * 3).size(), 7U);
  EXPECT_EQ(groups_of_order(16).size(), 5U);
  EXPECT_EQ(groups_of_order(72).size(), 6U);
  EXPECT_EQ(groups_of_order(97).size(), 1U);
}

TEST(AbelianGroup, UnitsOfFieldProduct) {
  const unsigned degrees[] = {3, 2, 2};
  const auto g = units_of_field_product(degrees);
  EXPECT_EQ(g, parse_group("7,3,3"));
  const unsigned bad[] = {0};
  EXPECT_THROW(units_of_field_product(bad), DomainError);
  const unsigned huge[] = {65};
  EXPECT_THROW(units_of_field_product(huge), ResourceError);
}
