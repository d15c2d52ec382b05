#include "unitring/realize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "unitring/errors.hpp"
#include "unitring/gf2ext.hpp"

namespace unitring {

namespace {

constexpr unsigned kMaxCardinalExponent = 64;

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, unsigned>& key) const {
    return std::hash<std::uint64_t>{}(key.first * 0x9E3779B97F4A7C15ULL ^ key.second);
  }
};

void require_odd_order(const AbelianGroup& g, const char* what) {
  const auto primes = g.primes();
  if (!primes.empty() && primes.front() == 2) {
    throw DomainError(std::string(what) + ": group " + g.to_string() +
                      " has even order; only odd-order groups are decided");
  }
}

// Primary decomposition of a divisor m of |G| using only the primes of G.
std::vector<PrimePower> split_over(u128 m, const std::vector<std::uint64_t>& primes) {
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    // C_{2^n - 1} is cyclic: its p-part is the single block C_{p^e}.
    if (e > 0) out.push_back({p, e});
  }
  return out;
}

// remaining minus block as multisets; false when block is not contained.
bool subtract(const std::vector<PrimePower>& remaining, const std::vector<PrimePower>& block,
              std::vector<PrimePower>& out) {
  out.clear();
  std::size_t j = 0;
  for (const auto& pp : remaining) {
    if (j < block.size() && block[j] == pp) {
      ++j;
    } else {
      out.push_back(pp);
    }
  }
  return j == block.size();
}

struct MersenneBlock {
  unsigned n;
  std::vector<PrimePower> primary;
};

class GroupCover {
 public:
  explicit GroupCover(std::vector<MersenneBlock> blocks) : blocks_(std::move(blocks)) {}

  // Blocks are sorted by n descending; `first` is the first index allowed.
  bool search(const std::vector<PrimePower>& remaining, std::size_t first,
              std::vector<unsigned>& chosen) {
    if (remaining.empty()) return true;
    if (failed_.contains({remaining, first})) return false;
    std::vector<PrimePower> rest;
    for (std::size_t i = first; i < blocks_.size(); ++i) {
      if (!subtract(remaining, blocks_[i].primary, rest)) continue;
      chosen.push_back(blocks_[i].n);
      if (search(rest, i, chosen)) return true;
      chosen.pop_back();
    }
    failed_.insert({remaining, first});
    return false;
  }

 private:
  std::vector<MersenneBlock> blocks_;
  std::set<std::pair<std::vector<PrimePower>, std::size_t>> failed_;
};

// Exact integer z-th root test for values below 2^64.
bool is_perfect_power(std::uint64_t m, unsigned z) {
  const double estimate = std::pow(static_cast<double>(m), 1.0 / z);
  const auto guess = static_cast<std::uint64_t>(std::llround(estimate));
  for (std::uint64_t r = guess > 2 ? guess - 2 : 0; r <= guess + 2; ++r) {
    u128 power = 1;
    bool overflow = false;
    for (unsigned i = 0; i < z; ++i) {
      power *= r;
      if (power > m) {
        overflow = true;
        break;
      }
    }
    if (!overflow && power == m) return true;
  }
  return false;
}

}  // namespace

std::string to_string(const Cardinal& c) {
  if (const auto* f = std::get_if<FiniteCardinal>(&c)) return std::to_string(f->value);
  return std::get<InfiniteCardinal>(c).label;
}

void validate_witness(const WitnessRing& w) {
  if (const auto* p = std::get_if<ProductOfFields>(&w)) {
    if (p->degrees.empty()) throw DomainError("product of fields needs at least one factor");
    for (unsigned d : p->degrees) {
      if (d == 0) throw DomainError("field degrees must be at least 1");
    }
  } else if (const auto* e = std::get_if<EvenUnitRing>(&w)) {
    if (e->m == 0) throw DomainError("Z[x]/(x^2, mx) needs m >= 1");
  } else if (std::get<RationalFunctionField>(w).cardinal_label.empty()) {
    throw DomainError("rational function field needs an infinite cardinal label");
  }
}

std::string describe(const WitnessRing& w) {
  if (const auto* p = std::get_if<ProductOfFields>(&w)) {
    std::string out;
    for (unsigned d : p->degrees) {
      if (!out.empty()) out += " x ";
      out += "GF(2^" + std::to_string(d) + ")";
    }
    return out;
  }
  if (const auto* e = std::get_if<EvenUnitRing>(&w)) {
    return "Z[x]/(x^2, " + std::to_string(e->m) + "x)";
  }
  return "F_2(S), |S| = " + std::get<RationalFunctionField>(w).cardinal_label;
}

std::optional<OddCertificate> odd_product_decomposition(std::uint64_t k) {
  if (k == 0 || k % 2 == 0) {
    throw DomainError("odd_product_decomposition requires an odd positive integer");
  }
  std::vector<unsigned> candidates;  // descending
  for (unsigned n = kMaxCardinalExponent; n >= 2; --n) {
    if (k % static_cast<std::uint64_t>(mersenne(n)) == 0) candidates.push_back(n);
  }

  std::unordered_set<std::pair<std::uint64_t, unsigned>, PairHash> failed;
  std::vector<unsigned> chosen;
  std::function<bool(std::uint64_t, unsigned)> dfs = [&](std::uint64_t rest, unsigned bound) {
    if (rest == 1) return true;
    if (failed.contains({rest, bound})) return false;
    for (unsigned n : candidates) {
      if (n > bound) continue;
      const auto m = static_cast<std::uint64_t>(mersenne(n));
      if (rest % m != 0) continue;
      chosen.push_back(n);
      if (dfs(rest / m, n)) return true;
      chosen.pop_back();
    }
    failed.insert({rest, bound});
    return false;
  };
  if (!dfs(k, kMaxCardinalExponent)) return std::nullopt;
  return OddCertificate{chosen};
}

RealizabilityAnswer realize_cardinal(const Cardinal& lambda) {
  RealizabilityAnswer answer;
  if (const auto* inf = std::get_if<InfiniteCardinal>(&lambda)) {
    answer.realizable = true;
    answer.witness = RationalFunctionField{inf->label.empty() ? "infinite" : inf->label};
    return answer;
  }
  const std::uint64_t k = std::get<FiniteCardinal>(lambda).value;
  if (k == 0) {
    answer.reason = "every unit group contains the identity, so no ring has 0 units";
    return answer;
  }
  if (k % 2 == 0) {
    answer.realizable = true;
    answer.witness = EvenUnitRing{k / 2};
    return answer;
  }
  auto cert = odd_product_decomposition(k);
  if (!cert) {
    answer.reason = "an odd unit count must be a product of numbers 2^n - 1, and " +
                    std::to_string(k) + " is not";
    return answer;
  }
  answer.realizable = true;
  std::vector<unsigned> degrees = cert->exponents;
  if (degrees.empty()) degrees.push_back(1);
  answer.witness = ProductOfFields{std::move(degrees)};
  answer.certificate = std::move(cert);
  return answer;
}

std::optional<ProductOfFields> realize_group_odd(const AbelianGroup& g) {
  require_odd_order(g, "realize_group_odd");
  if (g.is_trivial()) return ProductOfFields{{1}};
  const u128 order = g.order();
  const auto primes = g.primes();
  std::vector<MersenneBlock> blocks;
  for (unsigned n = 127; n >= 2; --n) {
    const u128 m = mersenne(n);
    if (m > order || order % m != 0) continue;
    blocks.push_back({n, split_over(m, primes)});
  }
  GroupCover cover(std::move(blocks));
  std::vector<unsigned> chosen;
  if (!cover.search(g.primary(), 0, chosen)) return std::nullopt;
  return ProductOfFields{std::move(chosen)};
}

std::optional<ProductOfFields> realize_p_group(std::uint64_t p, const AbelianGroup& g) {
  if (p == 2) {
    throw DomainError(
        "p = 2 is out of scope: the elementary-abelian criterion does not hold at p = 2, "
        "since the non-elementary group C_4 is the unit group of F_5");
  }
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (!g.is_p_group(p)) {
    throw DomainError(g.to_string() + " is not a " + std::to_string(p) + "-group");
  }
  if (g.is_trivial()) return ProductOfFields{{1}};
  if (!std::has_single_bit(p + 1) || !g.is_elementary_abelian(p)) return std::nullopt;
  const auto n = static_cast<unsigned>(std::countr_zero(p + 1));
  return ProductOfFields{std::vector<unsigned>(g.primary().size(), n)};
}

bool mersenne_power_check(unsigned n_max) {
  if (n_max < 2 || n_max > 63) throw DomainError("mersenne_power_check needs 2 <= n_max <= 63");
  for (unsigned n = 2; n <= n_max; ++n) {
    const auto m = static_cast<std::uint64_t>(mersenne(n));
    for (unsigned z = 2; z < 64; ++z) {
      if (is_perfect_power(m, z)) return false;
    }
  }
  return true;
}

DegreeCounts s_ring_degrees(const AbelianGroup& g, FactorOptions options) {
  require_odd_order(g, "s_ring_degrees");
  if (g.order() > kSRingDimensionGuard) {
    throw ResourceError("S-ring dimension " + to_string(g.order()) + " exceeds 2^20");
  }
  DegreeCounts current{{1, 1}};
  std::map<std::uint64_t, DegreeCounts> layer_cache;
  for (const auto& [p, e] : g.primary()) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    auto [it, inserted] = layer_cache.try_emplace(q);
    if (inserted) {
      for (unsigned d : factor_xq_minus_1(q, options)) ++it->second[d];
    }
    DegreeCounts next;
    for (const auto& [a, ca] : current) {
      for (const auto& [b, cb] : it->second) {
        for (unsigned d : tensor_split(a, b)) next[d] += ca * cb;
      }
    }
    current = std::move(next);
  }
  return current;
}

std::uint64_t total_dimension(const DegreeCounts& counts) {
  std::uint64_t total = 0;
  for (const auto& [d, c] : counts) total += static_cast<std::uint64_t>(d) * c;
  return total;
}

std::vector<unsigned> expand_degrees(const DegreeCounts& counts) {
  std::vector<unsigned> out;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    out.insert(out.end(), it->second, it->first);
  }
  return out;
}

std::optional<std::vector<unsigned>> s_ring_subset_search(const AbelianGroup& g,
                                                          FactorOptions options) {
  const DegreeCounts available = s_ring_degrees(g, options);
  if (g.is_trivial()) return std::vector<unsigned>{1};
  const u128 order = g.order();

  // Only fields whose unit count divides |G| can appear in the subproduct.
  std::vector<std::pair<unsigned, std::uint64_t>> useful;
  for (auto it = available.rbegin(); it != available.rend(); ++it) {
    if (it->first < 2 || it->first > 64) continue;
    if (order % mersenne(it->first) == 0) useful.emplace_back(it->first, it->second);
  }

  std::vector<unsigned> chosen;
  std::function<bool(std::size_t, u128)> enumerate = [&](std::size_t i, u128 product) {
    if (i == useful.size()) {
      if (product != order) return false;
      return iso_test(units_of_field_product(chosen), g);
    }
    const auto [d, avail] = useful[i];
    const u128 m = mersenne(d);
    std::uint64_t max_count = 0;
    for (u128 p = product * m; max_count < avail && order % p == 0; p *= m) ++max_count;
    for (std::uint64_t c = max_count + 1; c-- > 0;) {
      chosen.insert(chosen.end(), c, d);
      u128 p = product;
      for (std::uint64_t j = 0; j < c; ++j) p *= m;
      if (enumerate(i + 1, p)) return true;
      chosen.resize(chosen.size() - c);
    }
    return false;
  };
  if (!enumerate(0, 1)) return std::nullopt;
  return chosen;
}

}  // namespace unitring
