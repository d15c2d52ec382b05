#include "unitring/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "unitring/detail/factor_pipeline.hpp"
#include "unitring/errors.hpp"

namespace unitring {

namespace {

constexpr std::size_t kWordBits = 64;

// Interleaves zero bits: bit i of x moves to bit 2i.
std::uint64_t spread32(std::uint32_t x) {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

// Inverse of spread32 on the even bits.
std::uint32_t compact32(std::uint64_t v) {
  v &= 0x5555555555555555ULL;
  v = (v | (v >> 1)) & 0x3333333333333333ULL;
  v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
  return static_cast<std::uint32_t>(v);
}

void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    b &= b - 1;
    lo ^= a << i;
    if (i != 0) hi ^= a >> (kWordBits - i);
  }
}

// dst ^= src << shift (bit shift), dst already large enough.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = shift % kWordBits;
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= src[i] << bit_shift;
    const std::size_t upper = i + word_shift + 1;
    if (upper < dst.size()) dst[upper] ^= src[i] >> (kWordBits - bit_shift);
  }
}

long degree_of(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return static_cast<long>(i * kWordBits) + 63 - std::countl_zero(w[i]);
  }
  return -1;
}

bool bit_at(const std::vector<std::uint64_t>& w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

// Reduces `work` in place modulo m (deg m >= 0); optionally records the
// quotient bits.
void reduce_in_place(std::vector<std::uint64_t>& work, const PolyGF2& m,
                     std::vector<std::uint64_t>* quotient) {
  const long dm = m.degree();
  long d = degree_of(work);
  while (d >= dm) {
    const auto shift = static_cast<std::size_t>(d - dm);
    xor_shifted(work, m.words(), shift);
    if (quotient != nullptr) (*quotient)[shift / kWordBits] ^= 1ULL << (shift % kWordBits);
    // The leading bit is now cleared; scan downwards from it.
    long next = d - 1;
    while (next >= dm && !bit_at(work, static_cast<std::size_t>(next))) --next;
    d = next;
  }
}

void check_public_degree(const PolyGF2& f) {
  if (f.degree() > kMaxPublicDegree) {
    throw ResourceError("polynomial degree " + std::to_string(f.degree()) +
                        " exceeds the cap of " + std::to_string(kMaxPublicDegree));
  }
}

struct Gf2Ops {
  using Poly = PolyGF2;
  unsigned field_bits() const { return 1; }
  Poly one() const { return PolyGF2::one(); }
  Poly x() const { return PolyGF2::x(); }
  long degree(const Poly& p) const { return p.degree(); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly div_exact(const Poly& a, const Poly& b) const { return divrem(a, b).quotient; }
  Poly mod(const Poly& a, const Poly& m) const { return unitring::mod(a, m); }
  Poly gcd(const Poly& a, const Poly& b) const { return unitring::gcd(a, b); }
  Poly monic(const Poly& a) const { return a; }
  Poly derivative(const Poly& a) const { return unitring::derivative(a); }
  Poly sqrt_of_square(const Poly& a) const { return unitring::sqrt_of_square(a); }
  Poly sqrmod(const Poly& a, const Poly& m) const { return unitring::sqrmod(a, m); }
  Poly random_below(long deg, std::mt19937_64& rng) const {
    std::vector<std::uint64_t> words((static_cast<std::size_t>(deg) + 63) / 64);
    for (auto& w : words) w = rng();
    const auto tail = static_cast<unsigned>(deg % 64);
    if (tail != 0) words.back() &= (1ULL << tail) - 1;
    return PolyGF2::from_words(std::move(words));
  }
  bool less(const Poly& a, const Poly& b) const { return a < b; }
};

}  // namespace

PolyGF2 PolyGF2::from_bits(std::uint64_t bits) {
  PolyGF2 p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

PolyGF2 PolyGF2::from_words(std::vector<std::uint64_t> words) {
  PolyGF2 p;
  p.words_ = std::move(words);
  p.trim();
  return p;
}

PolyGF2 PolyGF2::monomial(std::size_t degree) {
  PolyGF2 p;
  p.set_coeff(degree, true);
  return p;
}

PolyGF2 PolyGF2::from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw UsageError("empty polynomial hex string");
  PolyGF2 p;
  p.words_.assign((text.size() * 4 + 63) / 64, 0);
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const char c = *it;
    std::uint64_t nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<std::uint64_t>(c - 'A' + 10);
    } else {
      throw UsageError(std::string("invalid hex digit '") + c + "' in polynomial");
    }
    p.words_[bit / 64] |= nibble << (bit % 64);
  }
  p.trim();
  return p;
}

std::string PolyGF2::to_hex() const {
  if (words_.empty()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const long deg = degree();
  for (long nib = deg / 4; nib >= 0; --nib) {
    const auto bit = static_cast<std::size_t>(nib) * 4;
    out.push_back(kDigits[(words_[bit / 64] >> (bit % 64)) & 0xF]);
  }
  return "0x" + out;
}

long PolyGF2::degree() const { return degree_of(words_); }

bool PolyGF2::coeff(std::size_t i) const {
  return i / kWordBits < words_.size() && bit_at(words_, i);
}

void PolyGF2::set_coeff(std::size_t i, bool value) {
  if (i / kWordBits >= words_.size()) {
    if (!value) return;
    words_.resize(i / kWordBits + 1, 0);
  }
  const std::uint64_t mask = 1ULL << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
    trim();
  }
}

std::string PolyGF2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "1";
    } else if (i == 1) {
      os << "x";
    } else {
      os << "x^" << i;
    }
  }
  return os.str();
}

void PolyGF2::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

PolyGF2& PolyGF2::operator+=(const PolyGF2& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

PolyGF2 operator*(const PolyGF2& lhs, const PolyGF2& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<std::uint64_t> out(lhs.words_.size() + rhs.words_.size(), 0);
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    if (lhs.words_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      clmul64(lhs.words_[i], rhs.words_[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
  return PolyGF2::from_words(std::move(out));
}

std::strong_ordering operator<=>(const PolyGF2& lhs, const PolyGF2& rhs) {
  if (lhs.words_.size() != rhs.words_.size()) return lhs.words_.size() <=> rhs.words_.size();
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (lhs.words_[i] != rhs.words_[i]) return lhs.words_[i] <=> rhs.words_[i];
  }
  return std::strong_ordering::equal;
}

DivRemGF2 divrem(const PolyGF2& a, const PolyGF2& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {PolyGF2{}, a};
  std::vector<std::uint64_t> work(a.words().begin(), a.words().end());
  std::vector<std::uint64_t> quotient(
      static_cast<std::size_t>(a.degree() - b.degree()) / kWordBits + 1, 0);
  reduce_in_place(work, b, &quotient);
  return {PolyGF2::from_words(std::move(quotient)), PolyGF2::from_words(std::move(work))};
}

PolyGF2 mod(const PolyGF2& a, const PolyGF2& m) {
  if (m.is_zero()) throw DomainError("reduction modulo the zero polynomial");
  if (a.degree() < m.degree()) return a;
  std::vector<std::uint64_t> work(a.words().begin(), a.words().end());
  reduce_in_place(work, m, nullptr);
  return PolyGF2::from_words(std::move(work));
}

PolyGF2 mulmod(const PolyGF2& a, const PolyGF2& b, const PolyGF2& m) { return mod(a * b, m); }

PolyGF2 sqrmod(const PolyGF2& a, const PolyGF2& m) { return mod(square(a), m); }

PolyGF2 powmod(const PolyGF2& base, std::uint64_t exponent, const PolyGF2& m) {
  PolyGF2 result = mod(PolyGF2::one(), m);
  PolyGF2 b = mod(base, m);
  while (exponent != 0) {
    if (exponent & 1U) result = mulmod(result, b, m);
    exponent >>= 1;
    if (exponent != 0) b = sqrmod(b, m);
  }
  return result;
}

PolyGF2 gcd(PolyGF2 a, PolyGF2 b) {
  while (!b.is_zero()) {
    PolyGF2 r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyGF2 derivative(const PolyGF2& f) {
  std::vector<std::uint64_t> out(f.words().begin(), f.words().end());
  for (auto& w : out) w = (w >> 1) & 0x5555555555555555ULL;
  return PolyGF2::from_words(std::move(out));
}

PolyGF2 square(const PolyGF2& f) {
  std::vector<std::uint64_t> out(2 * f.words().size(), 0);
  for (std::size_t i = 0; i < f.words().size(); ++i) {
    out[2 * i] = spread32(static_cast<std::uint32_t>(f.words()[i]));
    out[2 * i + 1] = spread32(static_cast<std::uint32_t>(f.words()[i] >> 32));
  }
  return PolyGF2::from_words(std::move(out));
}

PolyGF2 sqrt_of_square(const PolyGF2& f) {
  const auto words = f.words();
  std::vector<std::uint64_t> out((words.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if ((words[i] & 0xAAAAAAAAAAAAAAAAULL) != 0) {
      throw DomainError("polynomial is not a square: odd-degree terms present");
    }
    const std::uint64_t half = compact32(words[i]);
    out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
  }
  return PolyGF2::from_words(std::move(out));
}

bool squarefree_check(const PolyGF2& f) {
  if (f.is_zero()) throw DomainError("squarefree_check of the zero polynomial");
  check_public_degree(f);
  return gcd(f, derivative(f)).is_one();
}

bool is_irreducible(const PolyGF2& f) {
  if (f.degree() < 1) throw DomainError("irreducibility is undefined for constants");
  check_public_degree(f);
  const Gf2Ops ops;
  return detail::FactorPipeline<Gf2Ops>(ops, kDefaultFactorSeed).irreducible(f);
}

FactorizationGF2 factor(const PolyGF2& f, FactorOptions options) {
  if (f.degree() < 1) throw DomainError("cannot factor a constant polynomial");
  check_public_degree(f);
  const Gf2Ops ops;
  detail::FactorPipeline<Gf2Ops> pipeline(ops, options.seed);
  FactorizationGF2 out;
  for (auto& [poly, mult] : pipeline.run(f)) out.push_back({std::move(poly), mult});
  return out;
}

PolyGF2 expand(const FactorizationGF2& factors) {
  PolyGF2 result = PolyGF2::one();
  for (const auto& [poly, mult] : factors) {
    for (unsigned i = 0; i < mult; ++i) result = result * poly;
  }
  return result;
}

std::vector<unsigned> cyclotomic_coset_sizes(std::uint64_t q) {
  if (q == 0 || q % 2 == 0) throw DomainError("x^q - 1 requires odd q >= 1");
  if (q > kMaxCyclotomicOrder) throw ResourceError("x^q - 1 order exceeds the coset guard");
  std::vector<bool> seen(q, false);
  std::vector<unsigned> sizes;
  for (std::uint64_t start = 0; start < q; ++start) {
    if (seen[start]) continue;
    unsigned size = 0;
    std::uint64_t j = start;
    do {
      seen[j] = true;
      ++size;
      j = (2 * j) % q;
    } while (j != start);
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<unsigned> factor_xq_minus_1(std::uint64_t q, FactorOptions options) {
  if (q == 0 || q % 2 == 0) throw DomainError("x^q - 1 requires odd q >= 1");
  if (q > kExplicitCyclotomicLimit) return cyclotomic_coset_sizes(q);
  PolyGF2 f = PolyGF2::monomial(q);
  f.set_coeff(0, true);
  std::vector<unsigned> degrees;
  for (const auto& [poly, mult] : factor(f, options)) {
    if (mult != 1) throw DomainError("x^q - 1 with odd q must be squarefree");
    degrees.push_back(static_cast<unsigned>(poly.degree()));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace unitring
