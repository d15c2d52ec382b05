#pragma once

// GF(2^n) for 1 <= n <= 32, elements as reduced polynomials packed in a
// 64-bit word, and polynomials over those fields.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "unitring/gf2poly.hpp"

namespace unitring {

inline constexpr unsigned kMaxFieldDegree = 32;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

// Immutable after construction; share freely across threads.
class FieldCtx {
 public:
  // Modulus: the irreducible of degree n with the smallest integer encoding.
  static FieldRef make(unsigned n);

  unsigned degree() const { return n_; }
  const PolyGF2& modulus() const { return modulus_; }
  std::uint64_t size_minus_one() const { return (1ULL << n_) - 1; }

  // Raw element arithmetic on reduced representatives.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  // Unique square root: a^(2^(n-1)).
  std::uint64_t sqrt(std::uint64_t a) const;
  bool is_reduced(std::uint64_t a) const { return (a >> n_) == 0; }

 private:
  FieldCtx(unsigned n, PolyGF2 modulus);

  unsigned n_;
  PolyGF2 modulus_;
  std::uint64_t modulus_bits_;
};

class FieldElem {
 public:
  FieldElem(FieldRef ctx, std::uint64_t rep);

  static FieldElem zero(FieldRef ctx) { return {std::move(ctx), 0}; }
  static FieldElem one(FieldRef ctx) { return {std::move(ctx), 1}; }
  // The class of x modulo the defining polynomial.
  static FieldElem generator(FieldRef ctx);

  const FieldRef& context() const { return ctx_; }
  std::uint64_t rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  // "0x3@GF(2^2)"
  std::string to_string() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldRef ctx_;
  std::uint64_t rep_;
};

// Least t >= 1 with a^t = 1, found by descending through the divisors of
// 2^n - 1.
std::uint64_t multiplicative_order(const FieldElem& a);

class PolyExt {
 public:
  PolyExt(FieldRef ctx, std::vector<std::uint64_t> coeffs);

  static PolyExt lift(FieldRef ctx, const PolyGF2& f);

  const FieldRef& context() const { return ctx_; }
  const FieldCtx& field() const { return *ctx_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElem coeff(std::size_t i) const;
  std::span<const std::uint64_t> raw() const { return coeffs_; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::string to_string() const;

  friend bool operator==(const PolyExt& a, const PolyExt& b);
  // Degree, then coefficients read from the top down as base-2^n digits.
  friend bool canonical_less(const PolyExt& a, const PolyExt& b);

 private:
  void trim();

  FieldRef ctx_;
  std::vector<std::uint64_t> coeffs_;
};

struct DivRemExt {
  PolyExt quotient;
  PolyExt remainder;
};

PolyExt add(const PolyExt& a, const PolyExt& b);
PolyExt mul(const PolyExt& a, const PolyExt& b);
DivRemExt divrem(const PolyExt& a, const PolyExt& b);
PolyExt mod(const PolyExt& a, const PolyExt& m);
PolyExt gcd(const PolyExt& a, const PolyExt& b);
PolyExt monic(const PolyExt& a);
PolyExt derivative(const PolyExt& f);

struct ExtFactor {
  PolyExt poly;
  unsigned multiplicity = 0;
};

// Complete factorization over the coefficient field into monic irreducibles,
// canonically ordered.
std::vector<ExtFactor> factor_over_ext(const PolyExt& f, FactorOptions options = {});

// Field-factor degrees (over GF(2)) of GF(2^a) (x) GF(2^b): gcd(a,b) copies of
// lcm(a,b). Closed form.
std::vector<unsigned> tensor_split(unsigned a, unsigned b);

// The same multiset obtained by factoring the degree-b modulus over GF(2^a)
// and reading off a * deg(f_i) for each irreducible factor f_i.
std::vector<unsigned> tensor_split_by_factorization(unsigned a, unsigned b,
                                                    FactorOptions options = {});

// Sum of tensor_split(a, b) equals a * b.
bool tensor_dim_check(unsigned a, unsigned b);

}  // namespace unitring
