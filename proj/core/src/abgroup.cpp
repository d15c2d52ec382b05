#include "unitring/abgroup.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "unitring/errors.hpp"

namespace unitring {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's cycle finding; n is odd, composite and not a prime power of a
// small prime. Restart schedule: c = 1, 2, 3, ...
std::uint64_t rho_split(std::uint64_t n) {
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = y;
    std::uint64_t ys = y;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = rho_split(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<std::vector<unsigned>> partitions_of(unsigned total, unsigned largest) {
  if (total == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(total, largest); first >= 1; --first) {
    for (auto& rest : partitions_of(total - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

u128 ipow(std::uint64_t p, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {2,  3,  5,  7,  11, 13,
                                                          17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  static constexpr std::array<std::uint64_t, 7> kBases = {2,      325,     9375,      28178,
                                                          450775, 9780504, 1795265022};
  for (std::uint64_t a : kBases) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor_integer(std::uint64_t n) {
  if (n == 0) throw DomainError("factor_integer: n must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

AbelianGroup AbelianGroup::from_primary(std::vector<PrimePower> factors) {
  u128 order = 1;
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) throw DomainError("primary factor " + std::to_string(p) + " is not prime");
    if (e == 0) throw DomainError("primary factor exponent must be at least 1");
    for (unsigned i = 0; i < e; ++i) {
      auto next = checked_mul(order, p);
      if (!next) throw ResourceError("group order exceeds 128 bits");
      order = *next;
    }
  }
  std::sort(factors.begin(), factors.end());
  AbelianGroup g;
  g.primary_ = std::move(factors);
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const std::uint64_t> orders) {
  std::vector<PrimePower> factors;
  for (std::uint64_t m : orders) {
    if (m == 0) throw DomainError("cyclic order must be at least 1");
    for (const auto& pp : factor_integer(m)) factors.push_back(pp);
  }
  return from_primary(std::move(factors));
}

AbelianGroup AbelianGroup::elementary(std::uint64_t p, unsigned rank) {
  return from_primary(std::vector<PrimePower>(rank, PrimePower{p, 1}));
}

u128 AbelianGroup::order() const {
  u128 order = 1;
  for (const auto& [p, e] : primary_) order *= ipow(p, e);
  return order;
}

u128 AbelianGroup::exponent() const {
  u128 result = 1;
  for (std::size_t i = 0; i < primary_.size(); ++i) {
    // Sorted by (p, e): the last entry for each prime has the largest e.
    if (i + 1 == primary_.size() || primary_[i + 1].prime != primary_[i].prime) {
      result *= ipow(primary_[i].prime, primary_[i].exponent);
    }
  }
  return result;
}

std::vector<std::uint64_t> AbelianGroup::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& pp : primary_) {
    if (out.empty() || out.back() != pp.prime) out.push_back(pp.prime);
  }
  return out;
}

bool AbelianGroup::is_p_group(std::uint64_t p) const {
  return std::all_of(primary_.begin(), primary_.end(),
                     [p](const PrimePower& pp) { return pp.prime == p; });
}

bool AbelianGroup::is_elementary_abelian(std::uint64_t p) const {
  return std::all_of(primary_.begin(), primary_.end(), [p](const PrimePower& pp) {
    return pp.prime == p && pp.exponent == 1;
  });
}

std::vector<u128> AbelianGroup::invariant_factors() const {
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  for (const auto& [p, e] : primary_) by_prime[p].push_back(e);
  std::size_t rank = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.rbegin(), exps.rend());
    rank = std::max(rank, exps.size());
  }
  std::vector<u128> out(rank, 1);
  for (const auto& [p, exps] : by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) out[rank - 1 - i] *= ipow(p, exps[i]);
  }
  return out;
}

std::string AbelianGroup::to_string() const {
  if (primary_.empty()) return "C_1";
  std::string out;
  for (const auto& [p, e] : primary_) {
    if (!out.empty()) out += " x ";
    out += "C_" + unitring::to_string(ipow(p, e));
  }
  return out;
}

AbelianGroup operator*(const AbelianGroup& lhs, const AbelianGroup& rhs) {
  std::vector<PrimePower> all = lhs.primary_;
  all.insert(all.end(), rhs.primary_.begin(), rhs.primary_.end());
  return AbelianGroup::from_primary(std::move(all));
}

bool iso_test(const AbelianGroup& g, const AbelianGroup& h) { return g.primary() == h.primary(); }

AbelianGroup units_of_field_product(std::span<const unsigned> degrees) {
  std::vector<std::uint64_t> orders;
  orders.reserve(degrees.size());
  for (unsigned d : degrees) {
    if (d == 0) throw DomainError("field extension degree must be at least 1");
    if (d > 64) throw ResourceError("field degree " + std::to_string(d) + " exceeds 64");
    orders.push_back(static_cast<std::uint64_t>(mersenne(d)));
  }
  return AbelianGroup::from_cyclic_orders(orders);
}

OrderStatistics order_statistics(const AbelianGroup& g) {
  if (g.order() > kOrderStatisticsGuard) {
    throw ResourceError("order statistics are limited to groups of order <= 2^40");
  }
  OrderStatistics stats{{1, 1}};
  const auto& primary = g.primary();
  for (std::size_t i = 0; i < primary.size();) {
    const std::uint64_t p = primary[i].prime;
    std::vector<unsigned> exps;
    for (; i < primary.size() && primary[i].prime == p; ++i) exps.push_back(primary[i].exponent);
    const unsigned top = *std::max_element(exps.begin(), exps.end());

    // #{x : x^(p^k) = 1} = p^(sum_i min(e_i, k)).
    std::vector<std::uint64_t> dividing(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
      unsigned total = 0;
      for (unsigned e : exps) total += std::min(e, k);
      dividing[k] = static_cast<std::uint64_t>(ipow(p, total));
    }
    OrderStatistics next;
    for (const auto& [ord, count] : stats) {
      std::uint64_t pk = 1;
      for (unsigned k = 0; k <= top; ++k, pk *= p) {
        const std::uint64_t exact = dividing[k] - (k == 0 ? 0 : dividing[k - 1]);
        next[ord * pk] += count * exact;
      }
    }
    stats = std::move(next);
  }
  return stats;
}

std::vector<std::uint64_t> parse_cyclic_orders(std::string_view spec) {
  std::vector<std::uint64_t> orders;
  std::string token;
  auto flush = [&](bool at_end) {
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
    const std::string raw = token.substr(b, e - b);
    token.clear();
    if (raw.empty()) {
      if (at_end && orders.empty()) throw UsageError("empty group description");
      throw UsageError("empty cyclic factor in group description");
    }
    std::string_view digits = raw;
    if (digits.front() == 'C' || digits.front() == 'c') {
      digits.remove_prefix(1);
      if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
    }
    auto value = parse_u128(digits);
    if (!value || *value == 0 || *value > UINT64_MAX) {
      throw UsageError("invalid cyclic factor '" + raw + "'");
    }
    orders.push_back(static_cast<std::uint64_t>(*value));
  };
  for (char c : spec) {
    if (c == ',' || c == 'x' || c == 'X') {
      flush(false);
    } else {
      token.push_back(c);
    }
  }
  flush(true);
  return orders;
}

AbelianGroup parse_group(std::string_view spec) {
  const auto orders = parse_cyclic_orders(spec);
  return AbelianGroup::from_cyclic_orders(orders);
}

std::vector<AbelianGroup> groups_of_order(std::uint64_t n) {
  std::vector<AbelianGroup> out{AbelianGroup{}};
  for (const auto& [p, a] : factor_integer(n)) {
    std::vector<AbelianGroup> next;
    for (const auto& base : out) {
      for (const auto& parts : partitions_of(a, a)) {
        std::vector<PrimePower> factors;
        for (unsigned e : parts) factors.push_back({p, e});
        next.push_back(base * AbelianGroup::from_primary(std::move(factors)));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace unitring
