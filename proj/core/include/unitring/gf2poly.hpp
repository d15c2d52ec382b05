#pragma once

// Dense polynomials over the two-element field, bit-packed into 64-bit
// words. Bit i of the packed sequence is the coefficient of x^i; the same
// integer encoding gives the canonical total order used for sorting
// factorizations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unitring {

class PolyGF2 {
 public:
  PolyGF2() = default;

  static PolyGF2 from_bits(std::uint64_t bits);
  static PolyGF2 from_words(std::vector<std::uint64_t> words);
  static PolyGF2 monomial(std::size_t degree);
  static PolyGF2 one() { return from_bits(1); }
  static PolyGF2 x() { return from_bits(2); }

  // Hex of the integer encoding, most significant digit first, optional
  // "0x" prefix. Throws UsageError on malformed text.
  static PolyGF2 from_hex(std::string_view text);
  std::string to_hex() const;

  // -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  std::span<const std::uint64_t> words() const { return words_; }

  // Human-readable form, e.g. "x^3 + x + 1".
  std::string to_string() const;

  PolyGF2& operator+=(const PolyGF2& rhs);
  friend PolyGF2 operator+(PolyGF2 lhs, const PolyGF2& rhs) { return lhs += rhs; }
  friend PolyGF2 operator*(const PolyGF2& lhs, const PolyGF2& rhs);

  friend bool operator==(const PolyGF2&, const PolyGF2&) = default;
  // Degree first, then integer encoding; both collapse to comparing the
  // packed words as one big unsigned integer.
  friend std::strong_ordering operator<=>(const PolyGF2& lhs, const PolyGF2& rhs);

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

struct DivRemGF2 {
  PolyGF2 quotient;
  PolyGF2 remainder;
};

// All of these throw DomainError when the divisor/modulus is zero.
DivRemGF2 divrem(const PolyGF2& a, const PolyGF2& b);
PolyGF2 mod(const PolyGF2& a, const PolyGF2& m);
PolyGF2 mulmod(const PolyGF2& a, const PolyGF2& b, const PolyGF2& m);
PolyGF2 sqrmod(const PolyGF2& a, const PolyGF2& m);
PolyGF2 powmod(const PolyGF2& base, std::uint64_t exponent, const PolyGF2& m);

PolyGF2 gcd(PolyGF2 a, PolyGF2 b);
PolyGF2 derivative(const PolyGF2& f);
PolyGF2 square(const PolyGF2& f);
// Inverse of square(); requires every odd coefficient to be zero.
PolyGF2 sqrt_of_square(const PolyGF2& f);

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'f2f2'2024'0001ULL;
inline constexpr long kMaxPublicDegree = 1L << 16;

struct FactorOptions {
  std::uint64_t seed = kDefaultFactorSeed;
};

struct PolyFactor {
  PolyGF2 poly;
  unsigned multiplicity = 0;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

using FactorizationGF2 = std::vector<PolyFactor>;

bool squarefree_check(const PolyGF2& f);
bool is_irreducible(const PolyGF2& f);

// Complete factorization, factors sorted canonically.
FactorizationGF2 factor(const PolyGF2& f, FactorOptions options = {});

PolyGF2 expand(const FactorizationGF2& factors);

// Degrees of the irreducible factors of x^q - 1, q odd, sorted ascending.
// Small q are factored explicitly; larger q fall back to counting the
// cyclotomic cosets of 2 modulo q, which yields the same multiset.
std::vector<unsigned> factor_xq_minus_1(std::uint64_t q, FactorOptions options = {});

inline constexpr std::uint64_t kExplicitCyclotomicLimit = 2047;
inline constexpr std::uint64_t kMaxCyclotomicOrder = 1ULL << 24;

// Coset-counting route on its own; exposed for cross-checks.
std::vector<unsigned> cyclotomic_coset_sizes(std::uint64_t q);

}  // namespace unitring
