#pragma once

// Decision procedures for "which cardinals / odd-order abelian groups are
// unit groups of commutative rings", each answer carrying an explicit
// witness ring.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unitring/abgroup.hpp"
#include "unitring/gf2poly.hpp"

namespace unitring {

struct FiniteCardinal {
  std::uint64_t value = 0;
  friend bool operator==(const FiniteCardinal&, const FiniteCardinal&) = default;
};

// Symbolic only: "aleph_0", "aleph_3", or any opaque tag.
struct InfiniteCardinal {
  std::string label;
  friend bool operator==(const InfiniteCardinal&, const InfiniteCardinal&) = default;
};

using Cardinal = std::variant<FiniteCardinal, InfiniteCardinal>;

std::string to_string(const Cardinal& c);

// GF(2^d_1) x ... x GF(2^d_r); degrees kept sorted descending.
struct ProductOfFields {
  std::vector<unsigned> degrees;
  friend bool operator==(const ProductOfFields&, const ProductOfFields&) = default;
};

// Z[x]/(x^2, m x): exactly 2m units, the classes a + bx with a = +-1.
struct EvenUnitRing {
  std::uint64_t m = 1;
  friend bool operator==(const EvenUnitRing&, const EvenUnitRing&) = default;
};

// F_2(S) with |S| the given infinite cardinal.
struct RationalFunctionField {
  std::string cardinal_label;
  friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;
};

using WitnessRing = std::variant<ProductOfFields, EvenUnitRing, RationalFunctionField>;

// Throws DomainError when a witness violates its own invariants (empty
// degree list, zero degree, m = 0, empty label).
void validate_witness(const WitnessRing& w);

std::string describe(const WitnessRing& w);

// k = prod (2^n_i - 1); exponents sorted descending, all >= 2.
struct OddCertificate {
  std::vector<unsigned> exponents;
  friend bool operator==(const OddCertificate&, const OddCertificate&) = default;
};

struct RealizabilityAnswer {
  bool realizable = false;
  std::optional<WitnessRing> witness;
  std::optional<OddCertificate> certificate;
  std::string reason;
};

// Lexicographically largest nonincreasing exponent sequence, or nullopt.
// Throws DomainError for even or zero k.
std::optional<OddCertificate> odd_product_decomposition(std::uint64_t k);

RealizabilityAnswer realize_cardinal(const Cardinal& lambda);

// Throws DomainError for groups of even order.
std::optional<ProductOfFields> realize_group_odd(const AbelianGroup& g);

// Throws DomainError when p = 2, p is not an odd prime, or g is not a
// p-group.
std::optional<ProductOfFields> realize_p_group(std::uint64_t p, const AbelianGroup& g);

// True iff no 2^n - 1 (2 <= n <= n_max) is a perfect power with exponent >= 2.
bool mersenne_power_check(unsigned n_max);

// Field degree -> number of field factors with that degree.
using DegreeCounts = std::map<unsigned, std::uint64_t>;

inline constexpr std::uint64_t kSRingDimensionGuard = 1ULL << 20;

// Field decomposition of S = F_2[x_1..x_k]/(x_i^(q_i) - 1), q_i = p_i^a_i.
DegreeCounts s_ring_degrees(const AbelianGroup& g, FactorOptions options = {});

std::uint64_t total_dimension(const DegreeCounts& counts);
std::vector<unsigned> expand_degrees(const DegreeCounts& counts);

// A sub-multiset of s_ring_degrees(g) whose unit group is isomorphic to g
// (degree-1 fields dropped unless g is trivial), sorted descending.
std::optional<std::vector<unsigned>> s_ring_subset_search(const AbelianGroup& g,
                                                          FactorOptions options = {});

}  // namespace unitring
