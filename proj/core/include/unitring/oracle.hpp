#pragma once

// Brute-force verification. Finite commutative GF(2)-algebras are given by
// structure constants and enumerated element by element; the unit group of
// Z[x]/(x^2, mx) is enumerated through its (sign, residue) representation.
// Nothing here relies on the closed forms used by the realize module.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "unitring/abgroup.hpp"
#include "unitring/realize.hpp"

namespace unitring {

// Coordinates in the basis: bit i is the coefficient of basis element i.
using AlgebraVector = std::uint32_t;

inline constexpr unsigned kMaxAlgebraDim = 20;

struct FieldBlock {
  unsigned offset = 0;
  unsigned degree = 0;
  friend bool operator==(const FieldBlock&, const FieldBlock&) = default;
};

class FiniteAlgebra {
 public:
  // Checks dim <= 20, commutativity, associativity on all basis triples and
  // that `one` is an identity. `blocks` is non-empty only for algebras
  // assembled as products of fields.
  FiniteAlgebra(std::vector<std::string> basis_labels,
                std::vector<std::vector<AlgebraVector>> mul_table, AlgebraVector one,
                std::vector<FieldBlock> blocks = {});

  unsigned dim() const { return static_cast<unsigned>(labels_.size()); }
  std::uint64_t size() const { return 1ULL << dim(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<std::vector<AlgebraVector>>& mul_table() const { return table_; }
  AlgebraVector one() const { return one_; }
  const std::vector<FieldBlock>& field_blocks() const { return blocks_; }

  AlgebraVector multiply(AlgebraVector a, AlgebraVector b) const;
  AlgebraVector pow(AlgebraVector a, std::uint64_t e) const;
  // Solves a * x = 1 over GF(2); nullopt when a is not a unit.
  std::optional<AlgebraVector> inverse(AlgebraVector a) const;

 private:
  AlgebraVector times_basis(unsigned i, AlgebraVector b) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<AlgebraVector>> table_;
  AlgebraVector one_;
  std::vector<FieldBlock> blocks_;
  // lookup_[i][chunk][byte]: e_i times the byte-sized slice of b.
  std::vector<std::vector<std::array<AlgebraVector, 256>>> lookup_;
};

struct UnitSurvey {
  std::uint64_t count = 0;
  OrderStatistics orders;
  friend bool operator==(const UnitSurvey&, const UnitSurvey&) = default;
};

FiniteAlgebra build_product_of_fields(std::span<const unsigned> degrees);
FiniteAlgebra build_s_ring(const AbelianGroup& g);

UnitSurvey enumerate_units(const FiniteAlgebra& a);

// Projection onto the kept field factors (indices into field_blocks()).
FiniteAlgebra quotient_drop_factors(const FiniteAlgebra& a, std::span<const std::size_t> keep);

// a + bx in Z[x]/(x^2, mx) with a = sign.
struct EvenRingUnitRep {
  int sign = 1;
  std::uint64_t b = 0;

  static EvenRingUnitRep multiply(const EvenRingUnitRep& x, const EvenRingUnitRep& y,
                                  std::uint64_t m);
  friend bool operator==(const EvenRingUnitRep&, const EvenRingUnitRep&) = default;
};

inline constexpr std::uint64_t kMaxSurveyModulus = 1'000'000;

// Enumerates the 2m candidate units, checks identity, inverses
// (a + bx)(a - bx) = 1 and closure of every product formed, and returns
// the count and order statistics.
UnitSurvey r2m_unit_survey(std::uint64_t m);

using VerificationTarget = std::variant<Cardinal, AbelianGroup>;

struct WitnessVerdict {
  bool verified = false;
  // "enumeration", "formula" (beyond an enumeration guard) or "symbolic".
  std::string method;
  std::string detail;
};

WitnessVerdict verify_witness(const WitnessRing& w, const VerificationTarget& expected);

}  // namespace unitring
