#pragma once

// Finite abelian groups kept in primary decomposition (a sorted multiset of
// cyclic factors C_{p^e}), plus the 64-bit integer factorization the
// bookkeeping needs.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitring/u128.hpp"

namespace unitring {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Deterministic Miller-Rabin, exact on the whole 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division, then Brent's rho with f(x) = x^2 + c, c = 1, 2, ...
// Sorted by prime. Throws DomainError for n = 0.
std::vector<PrimePower> factor_integer(std::uint64_t n);

class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Validates primality of each p and the 128-bit order guard.
  static AbelianGroup from_primary(std::vector<PrimePower> factors);
  static AbelianGroup from_cyclic_orders(std::span<const std::uint64_t> orders);
  static AbelianGroup elementary(std::uint64_t p, unsigned rank);

  const std::vector<PrimePower>& primary() const { return primary_; }
  bool is_trivial() const { return primary_.empty(); }
  u128 order() const;
  u128 exponent() const;
  // Distinct primes dividing the order, ascending.
  std::vector<std::uint64_t> primes() const;

  bool is_p_group(std::uint64_t p) const;
  bool is_elementary_abelian(std::uint64_t p) const;

  // d_1 | d_2 | ... | d_r, derived on demand.
  std::vector<u128> invariant_factors() const;

  // "C_3 x C_9"; the trivial group prints as "C_1".
  std::string to_string() const;

  friend AbelianGroup operator*(const AbelianGroup& lhs, const AbelianGroup& rhs);
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<PrimePower> primary_;
};

bool iso_test(const AbelianGroup& g, const AbelianGroup& h);

// Unit group of GF(2^d_1) x ... x GF(2^d_r), i.e. prod C_{2^d - 1}.
// Degrees above 64 or a product beyond 128 bits raise ResourceError.
AbelianGroup units_of_field_product(std::span<const unsigned> degrees);

// Element order -> number of elements of exactly that order.
using OrderStatistics = std::map<std::uint64_t, std::uint64_t>;

inline constexpr u128 kOrderStatisticsGuard = static_cast<u128>(1) << 40;

OrderStatistics order_statistics(const AbelianGroup& g);

// Group grammar: cyclic orders separated by "x" or commas, each optionally
// prefixed by "C" / "C_"; "C1" is the trivial group. Throws UsageError
// naming the offending token.
std::vector<std::uint64_t> parse_cyclic_orders(std::string_view spec);
AbelianGroup parse_group(std::string_view spec);

// Every isomorphism class of abelian group of order n (one per choice of
// exponent partitions), in a deterministic order.
std::vector<AbelianGroup> groups_of_order(std::uint64_t n);

}  // namespace unitring
