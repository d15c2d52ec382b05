#include "unitring/gf2ext.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "unitring/abgroup.hpp"
#include "unitring/detail/factor_pipeline.hpp"
#include "unitring/errors.hpp"

namespace unitring {

namespace {

void require_same_field(const FieldRef& a, const FieldRef& b) {
  if (a->degree() != b->degree()) {
    throw UsageError("field context mismatch: GF(2^" + std::to_string(a->degree()) +
                     ") vs GF(2^" + std::to_string(b->degree()) + ")");
  }
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

PolyExt ext_sqrt_of_square(const PolyExt& f) {
  const auto c = f.raw();
  std::vector<std::uint64_t> out((c.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (c[i] != 0) throw DomainError("polynomial is not a square");
      continue;
    }
    out[i / 2] = f.field().sqrt(c[i]);
  }
  return {f.context(), std::move(out)};
}

PolyExt ext_square(const PolyExt& f) {
  const auto c = f.raw();
  std::vector<std::uint64_t> out(c.empty() ? 0 : 2 * c.size() - 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[2 * i] = f.field().sqr(c[i]);
  return {f.context(), std::move(out)};
}

struct ExtOps {
  using Poly = PolyExt;
  FieldRef ctx;

  unsigned field_bits() const { return ctx->degree(); }
  Poly one() const { return {ctx, {1}}; }
  Poly x() const { return {ctx, {0, 1}}; }
  long degree(const Poly& p) const { return p.degree(); }
  Poly add(const Poly& a, const Poly& b) const { return unitring::add(a, b); }
  Poly div_exact(const Poly& a, const Poly& b) const { return divrem(a, b).quotient; }
  Poly mod(const Poly& a, const Poly& m) const { return unitring::mod(a, m); }
  Poly gcd(const Poly& a, const Poly& b) const { return unitring::gcd(a, b); }
  Poly monic(const Poly& a) const { return unitring::monic(a); }
  Poly derivative(const Poly& a) const { return unitring::derivative(a); }
  Poly sqrt_of_square(const Poly& a) const { return ext_sqrt_of_square(a); }
  Poly sqrmod(const Poly& a, const Poly& m) const { return unitring::mod(ext_square(a), m); }
  Poly random_below(long deg, std::mt19937_64& rng) const {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg));
    for (auto& v : c) v = rng() & ctx->size_minus_one();
    return {ctx, std::move(c)};
  }
  bool less(const Poly& a, const Poly& b) const { return canonical_less(a, b); }
};

}  // namespace

FieldCtx::FieldCtx(unsigned n, PolyGF2 modulus)
    : n_(n), modulus_(std::move(modulus)), modulus_bits_(modulus_.words()[0]) {}

FieldRef FieldCtx::make(unsigned n) {
  if (n == 0) throw DomainError("extension degree must be at least 1");
  if (n > kMaxFieldDegree) {
    throw ResourceError("extension degree " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxFieldDegree));
  }
  const std::uint64_t lo = 1ULL << n;
  for (std::uint64_t bits = lo; bits < 2 * lo; ++bits) {
    // For n > 1 a zero constant term means x divides the candidate.
    if (n > 1 && (bits & 1U) == 0) continue;
    PolyGF2 candidate = PolyGF2::from_bits(bits);
    if (is_irreducible(candidate)) {
      return FieldRef(new FieldCtx(n, std::move(candidate)));
    }
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t product = 0;
  while (b != 0) {
    const int i = __builtin_ctzll(b);
    b &= b - 1;
    product ^= a << i;
  }
  for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
    if ((product >> i) & 1U) product ^= modulus_bits_ << (i - static_cast<int>(n_));
  }
  return product;
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
  if (a == 0) throw DomainError("inversion of zero in GF(2^" + std::to_string(n_) + ")");
  return pow(a, size_minus_one() - 1);
}

std::uint64_t FieldCtx::sqrt(std::uint64_t a) const {
  for (unsigned i = 1; i < n_; ++i) a = sqr(a);
  return a;
}

FieldElem::FieldElem(FieldRef ctx, std::uint64_t rep) : ctx_(std::move(ctx)), rep_(rep) {
  if (!ctx_->is_reduced(rep_)) {
    throw UsageError("element " + hex(rep_) + " is not reduced modulo the field polynomial");
  }
}

FieldElem FieldElem::generator(FieldRef ctx) {
  // In GF(2) the modulus is x itself, so x reduces to 0; use 1 there.
  const std::uint64_t rep = ctx->degree() == 1 ? 1 : 2;
  return {std::move(ctx), rep};
}

FieldElem FieldElem::inv() const { return {ctx_, ctx_->inv(rep_)}; }

FieldElem FieldElem::pow(std::uint64_t e) const { return {ctx_, ctx_->pow(rep_, e)}; }

std::string FieldElem::to_string() const {
  return hex(rep_) + "@GF(2^" + std::to_string(ctx_->degree()) + ")";
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a.ctx_, b.ctx_);
  return {a.ctx_, a.rep_ ^ b.rep_};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a.ctx_, b.ctx_);
  return {a.ctx_, a.ctx_->mul(a.rep_, b.rep_)};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.ctx_->degree() == b.ctx_->degree() && a.rep_ == b.rep_;
}

std::uint64_t multiplicative_order(const FieldElem& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  const FieldCtx& f = *a.context();
  std::uint64_t t = f.size_minus_one();
  for (const auto& [p, e] : factor_integer(t)) {
    for (unsigned i = 0; i < e; ++i) {
      if (f.pow(a.rep(), t / p) != 1) break;
      t /= p;
    }
  }
  return t;
}

PolyExt::PolyExt(FieldRef ctx, std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (std::uint64_t c : coeffs_) {
    if (!ctx_->is_reduced(c)) throw UsageError("coefficient " + hex(c) + " is not reduced");
  }
  trim();
}

PolyExt PolyExt::lift(FieldRef ctx, const PolyGF2& f) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree() + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) ? 1 : 0;
  return {std::move(ctx), std::move(c)};
}

FieldElem PolyExt::coeff(std::size_t i) const {
  return {ctx_, i < coeffs_.size() ? coeffs_[i] : 0};
}

std::string PolyExt::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit_coeff = coeffs_[i] == 1;
    if (!unit_coeff || i == 0) os << hex(coeffs_[i]);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void PolyExt::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool operator==(const PolyExt& a, const PolyExt& b) {
  return a.ctx_->degree() == b.ctx_->degree() && a.coeffs_ == b.coeffs_;
}

bool canonical_less(const PolyExt& a, const PolyExt& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                      b.coeffs_.rend());
}

PolyExt add(const PolyExt& a, const PolyExt& b) {
  require_same_field(a.context(), b.context());
  const auto x = a.raw();
  const auto y = b.raw();
  std::vector<std::uint64_t> out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] ^= x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] ^= y[i];
  return {a.context(), std::move(out)};
}

PolyExt mul(const PolyExt& a, const PolyExt& b) {
  require_same_field(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return {a.context(), {}};
  const auto x = a.raw();
  const auto y = b.raw();
  const FieldCtx& f = a.field();
  std::vector<std::uint64_t> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] ^= f.mul(x[i], y[j]);
  }
  return {a.context(), std::move(out)};
}

DivRemExt divrem(const PolyExt& a, const PolyExt& b) {
  require_same_field(a.context(), b.context());
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const FieldCtx& f = a.field();
  if (a.degree() < b.degree()) return {PolyExt{a.context(), {}}, a};
  std::vector<std::uint64_t> rem(a.raw().begin(), a.raw().end());
  const auto d = b.raw();
  const std::size_t db = d.size() - 1;
  const std::uint64_t lead_inv = f.inv(d.back());
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const std::uint64_t coef = f.mul(rem[i], lead_inv);
    quot[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] ^= f.mul(coef, d[j]);
  }
  rem.resize(db);
  return {PolyExt{a.context(), std::move(quot)}, PolyExt{a.context(), std::move(rem)}};
}

PolyExt mod(const PolyExt& a, const PolyExt& m) { return divrem(a, m).remainder; }

PolyExt monic(const PolyExt& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  const FieldCtx& f = a.field();
  const std::uint64_t s = f.inv(a.leading());
  std::vector<std::uint64_t> out(a.raw().begin(), a.raw().end());
  for (auto& c : out) c = f.mul(c, s);
  return {a.context(), std::move(out)};
}

PolyExt gcd(const PolyExt& a, const PolyExt& b) {
  PolyExt x = a;
  PolyExt y = b;
  while (!y.is_zero()) {
    PolyExt r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

PolyExt derivative(const PolyExt& f) {
  const auto c = f.raw();
  std::vector<std::uint64_t> out(c.empty() ? 0 : c.size() - 1, 0);
  for (std::size_t i = 1; i < c.size(); i += 2) out[i - 1] = c[i];
  return {f.context(), std::move(out)};
}

std::vector<ExtFactor> factor_over_ext(const PolyExt& f, FactorOptions options) {
  if (f.degree() < 1) throw DomainError("cannot factor a constant polynomial");
  if (f.degree() > kMaxPublicDegree) throw ResourceError("polynomial degree exceeds the cap");
  const ExtOps ops{f.context()};
  detail::FactorPipeline<ExtOps> pipeline(ops, options.seed);
  std::vector<ExtFactor> out;
  for (auto& [poly, mult] : pipeline.run(f)) out.push_back({std::move(poly), mult});
  return out;
}

std::vector<unsigned> tensor_split(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw DomainError("tensor_split: extension degrees must be positive");
  return std::vector<unsigned>(std::gcd(a, b), std::lcm(a, b));
}

std::vector<unsigned> tensor_split_by_factorization(unsigned a, unsigned b,
                                                    FactorOptions options) {
  if (a == 0 || b == 0) throw DomainError("tensor_split: extension degrees must be positive");
  const FieldRef base = FieldCtx::make(a);
  const FieldRef top = FieldCtx::make(b);
  std::vector<unsigned> degrees;
  for (const auto& [poly, mult] : factor_over_ext(PolyExt::lift(base, top->modulus()), options)) {
    if (mult != 1) throw DomainError("modulus of a finite field must stay separable");
    degrees.push_back(a * static_cast<unsigned>(poly.degree()));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool tensor_dim_check(unsigned a, unsigned b) {
  const auto degrees = tensor_split(a, b);
  const unsigned long total = std::accumulate(degrees.begin(), degrees.end(), 0UL);
  return total == static_cast<unsigned long>(a) * b;
}

}  // namespace unitring
