#pragma once

// Squarefree / distinct-degree / equal-degree factorization over GF(2^n),
// written once against a small "ring ops" interface and instantiated for
// GF(2)[x] and GF(2^n)[x].
//
// Ops must provide:
//   using Poly;
//   unsigned field_bits() const;                 // n, field size 2^n
//   Poly one() const; Poly x() const;
//   long degree(const Poly&) const;              // -1 for zero
//   Poly add(const Poly&, const Poly&) const;
//   Poly div_exact(const Poly&, const Poly&) const;
//   Poly mod(const Poly&, const Poly&) const;
//   Poly gcd(const Poly&, const Poly&) const;    // monic
//   Poly monic(const Poly&) const;
//   Poly derivative(const Poly&) const;
//   Poly sqrt_of_square(const Poly&) const;      // input has zero derivative
//   Poly sqrmod(const Poly&, const Poly&) const;
//   Poly random_below(long degree, std::mt19937_64&) const;
//   bool less(const Poly&, const Poly&) const;   // canonical order

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace unitring::detail {

template <class Ops>
class FactorPipeline {
 public:
  using Poly = typename Ops::Poly;
  using Factor = std::pair<Poly, unsigned>;

  FactorPipeline(const Ops& ops, std::uint64_t seed) : ops_(ops), rng_(seed) {}

  // f must be nonzero with degree >= 1.
  std::vector<Factor> run(const Poly& f) {
    std::vector<Factor> squarefree_parts;
    squarefree_decomposition(ops_.monic(f), 1, squarefree_parts);

    std::vector<Factor> out;
    for (const auto& [part, multiplicity] : squarefree_parts) {
      for (const auto& [block, degree] : distinct_degree(part)) {
        std::vector<Poly> irreducibles;
        equal_degree(block, degree, irreducibles);
        for (auto& p : irreducibles) out.emplace_back(std::move(p), multiplicity);
      }
    }
    std::sort(out.begin(), out.end(), [this](const Factor& a, const Factor& b) {
      return ops_.less(a.first, b.first);
    });
    return out;
  }

  // Ben-Or: f is irreducible iff gcd(f, x^(q^i) - x) = 1 for all i <= deg/2.
  bool irreducible(const Poly& f) const {
    const long n = ops_.degree(f);
    if (n == 1) return true;
    const Poly x = ops_.mod(ops_.x(), f);
    Poly h = x;
    for (long i = 1; 2 * i <= n; ++i) {
      h = frobenius(h, f);
      const Poly g = ops_.gcd(f, ops_.add(h, x));
      if (ops_.degree(g) != 0) return false;
    }
    return true;
  }

  std::vector<Factor> squarefree_parts(const Poly& f) {
    std::vector<Factor> out;
    squarefree_decomposition(ops_.monic(f), 1, out);
    return out;
  }

 private:
  Poly frobenius(const Poly& h, const Poly& m) const {
    Poly r = h;
    for (unsigned i = 0; i < ops_.field_bits(); ++i) r = ops_.sqrmod(r, m);
    return r;
  }

  // Characteristic-2 variant: when the derivative vanishes the remaining
  // cofactor is a perfect square and we recurse on its square root.
  void squarefree_decomposition(const Poly& f, unsigned scale, std::vector<Factor>& out) {
    Poly c = ops_.gcd(f, ops_.derivative(f));
    Poly w = ops_.div_exact(f, c);
    unsigned i = 1;
    while (ops_.degree(w) > 0) {
      Poly y = ops_.gcd(w, c);
      Poly fac = ops_.div_exact(w, y);
      if (ops_.degree(fac) > 0) out.emplace_back(std::move(fac), i * scale);
      c = ops_.div_exact(c, y);
      w = std::move(y);
      ++i;
    }
    if (ops_.degree(c) > 0) squarefree_decomposition(ops_.sqrt_of_square(c), scale * 2, out);
  }

  std::vector<std::pair<Poly, long>> distinct_degree(const Poly& f) const {
    std::vector<std::pair<Poly, long>> out;
    Poly rest = f;
    Poly h = ops_.mod(ops_.x(), rest);
    for (long i = 1; ops_.degree(rest) >= 2 * i; ++i) {
      h = frobenius(h, rest);
      Poly g = ops_.gcd(rest, ops_.add(h, ops_.x()));
      if (ops_.degree(g) > 0) {
        rest = ops_.div_exact(rest, g);
        h = ops_.mod(h, rest);
        out.emplace_back(std::move(g), i);
      }
    }
    if (ops_.degree(rest) > 0) {
      const long d = ops_.degree(rest);
      out.emplace_back(std::move(rest), d);
    }
    return out;
  }

  // f is a product of distinct irreducibles of degree d. The absolute trace
  // Tr(a) = a + a^2 + ... + a^(2^(nd-1)) lands in GF(2) inside every residue
  // field, so gcd(f, Tr(a)) splits f with probability about 1/2.
  void equal_degree(const Poly& f, long d, std::vector<Poly>& out) {
    const long n = ops_.degree(f);
    if (n == d) {
      out.push_back(f);
      return;
    }
    const long trace_len = static_cast<long>(ops_.field_bits()) * d;
    for (;;) {
      const Poly a = ops_.random_below(n, rng_);
      if (ops_.degree(a) <= 0) continue;
      Poly t = a;
      Poly sum = a;
      for (long j = 1; j < trace_len; ++j) {
        t = ops_.sqrmod(t, f);
        sum = ops_.add(sum, t);
      }
      const Poly g = ops_.gcd(f, sum);
      const long gd = ops_.degree(g);
      if (gd > 0 && gd < n) {
        equal_degree(g, d, out);
        equal_degree(ops_.div_exact(f, g), d, out);
        return;
      }
    }
  }

  const Ops& ops_;
  std::mt19937_64 rng_;
};

}  // namespace unitring::detail
