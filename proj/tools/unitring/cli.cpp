#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unitring/abgroup.hpp"
#include "unitring/errors.hpp"
#include "unitring/gf2ext.hpp"
#include "unitring/gf2poly.hpp"
#include "unitring/json_io.hpp"
#include "unitring/oracle.hpp"
#include "unitring/realize.hpp"

namespace unitring::cli {

namespace {

using nlohmann::json;

std::uint64_t parse_u64(const std::string& token, const char* what) {
  const auto v = parse_u128(token);
  if (!v || *v > UINT64_MAX) {
    throw UsageError(std::string(what) + ": expected a 64-bit decimal integer, got '" + token + "'");
  }
  return static_cast<std::uint64_t>(*v);
}

unsigned parse_unsigned(const std::string& token, const char* what) {
  const auto v = parse_u64(token, what);
  if (v > UINT32_MAX) throw UsageError(std::string(what) + ": '" + token + "' is too large");
  return static_cast<unsigned>(v);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

// "1,1,2" or "1 1 2" -> {1, 1, 2}
std::vector<unsigned> parse_exponents(const std::string& text) {
  std::vector<unsigned> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const unsigned e = parse_unsigned(token, "exponent");
    if (e == 0) throw UsageError("exponent: '" + token + "' must be at least 1");
    out.push_back(e);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (out.empty()) throw UsageError("exponent list is empty");
  return out;
}

json degrees_json(std::vector<unsigned> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

json degree_counts_json(const DegreeCounts& counts) {
  json j = json::object();
  for (const auto& [d, c] : counts) j[std::to_string(d)] = c;
  return j;
}

json s_ring_cross_check(const AbelianGroup& g, bool realizable, FactorOptions opts) {
  if (g.order() > kSRingDimensionGuard) {
    return {{"performed", false},
            {"reason", "S-ring dimension " + to_string(g.order()) + " exceeds 2^20"}};
  }
  const auto counts = s_ring_degrees(g, opts);
  const auto subset = s_ring_subset_search(g, opts);
  json j = {{"performed", true},
            {"field_degrees", degree_counts_json(counts)},
            {"realizable", subset.has_value()},
            {"agrees", subset.has_value() == realizable}};
  if (subset) j["degrees"] = degrees_json(*subset);
  return j;
}

json cmd_realize_group(const std::string& spec, FactorOptions opts) {
  const AbelianGroup g = parse_group(spec);
  if (g.order() % 2 == 0) {
    return {{"out_of_scope", true},
            {"group", group_to_json(g)},
            {"reason", "only abelian groups of odd order are decided; " + g.to_string() +
                           " has even order"}};
  }
  const auto witness = realize_group_odd(g);
  json j = {{"group", group_to_json(g)}, {"realizable", witness.has_value()}};
  if (witness) {
    j["witness"] = witness_to_json(*witness);
    const auto units = units_of_field_product(witness->degrees);
    j["certificate"] = {{"unit_group", units.to_string()}, {"isomorphic", iso_test(units, g)}};
  } else {
    j["reason"] = "no product of cyclic groups C_{2^n - 1} is isomorphic to " + g.to_string();
  }
  j["s_ring_check"] = s_ring_cross_check(g, witness.has_value(), opts);
  return j;
}

json cmd_pgroup(const std::string& p_text, const std::string& exps_text,
                std::optional<unsigned> rank) {
  const std::uint64_t p = parse_u64(p_text, "prime");
  std::vector<unsigned> exps;
  if (rank) {
    if (!exps_text.empty()) throw UsageError("give either an exponent list or --rank, not both");
    exps.assign(*rank, 1);
  } else {
    if (exps_text.empty()) throw UsageError("missing exponent list (or --rank)");
    exps = parse_exponents(exps_text);
  }
  std::vector<PrimePower> factors;
  for (unsigned e : exps) factors.push_back({p, e});
  if (p == 2) {
    try {
      realize_p_group(p, AbelianGroup{});
    } catch (const DomainError& e) {
      return {{"out_of_scope", true}, {"p", p}, {"reason", e.what()}};
    }
  }
  if (!is_prime(p)) throw UsageError("prime: '" + p_text + "' is not prime");
  const AbelianGroup g = AbelianGroup::from_primary(std::move(factors));
  const auto witness = realize_p_group(p, g);
  json j = {{"p", p},
            {"group", group_to_json(g)},
            {"elementary_abelian", g.is_elementary_abelian(p)},
            {"mersenne_prime", std::has_single_bit(p + 1)},
            {"realizable", witness.has_value()}};
  if (witness) {
    j["witness"] = witness_to_json(*witness);
  } else {
    j["reason"] = "an abelian p-group is a unit group of a commutative ring only when p is a "
                  "Mersenne prime and the group is elementary abelian";
  }
  return j;
}

json cmd_factor_poly(const std::string& hex, FactorOptions opts) {
  const PolyGF2 f = PolyGF2::from_hex(hex);
  if (f.is_zero()) throw UsageError("cannot factor the zero polynomial");
  if (f.degree() > kMaxPublicDegree) {
    throw ResourceError("degree " + std::to_string(f.degree()) + " exceeds 2^16");
  }
  const auto fs = factor(f, opts);
  const bool squarefree = squarefree_check(f);
  const bool irreducible = is_irreducible(f);
  json factors = json::array();
  for (const auto& pf : fs) {
    factors.push_back(
        {{"poly", pf.poly.to_hex()}, {"degree", pf.poly.degree()}, {"multiplicity", pf.multiplicity}});
  }
  return {{"input", f.to_hex()},
          {"degree", f.degree()},
          {"squarefree", squarefree},
          {"irreducible", irreducible},
          {"factors", factors}};
}

json cmd_tensor_split(unsigned a, unsigned b, bool verify, FactorOptions opts) {
  const auto degrees = tensor_split(a, b);
  json j;
  j["degrees"] = degrees;
  if (verify) {
    const auto by_factor = tensor_split_by_factorization(a, b, opts);
    j["by_factorization"] = by_factor;
    j["agrees"] = by_factor == degrees;
    j["dimension_check"] = tensor_dim_check(a, b);
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

VerificationTarget predicted_target(const WitnessRing& w) {
  if (const auto* p = std::get_if<ProductOfFields>(&w)) return units_of_field_product(p->degrees);
  if (const auto* e = std::get_if<EvenUnitRing>(&w)) {
    return Cardinal{FiniteCardinal{2 * e->m}};
  }
  return Cardinal{InfiniteCardinal{std::get<RationalFunctionField>(w).cardinal_label}};
}

std::string target_name(const VerificationTarget& t) {
  if (const auto* g = std::get_if<AbelianGroup>(&t)) return g->to_string();
  return to_string(std::get<Cardinal>(t));
}

json cmd_verify(const std::string& path, const std::string& cardinal, const std::string& group) {
  const json doc = read_json_file(path);
  const json& wj = doc.contains("witness") ? doc["witness"] : doc;
  const WitnessRing w = witness_from_json(wj);

  std::optional<VerificationTarget> target;
  std::string source = "command line";
  if (!cardinal.empty()) {
    target = parse_cardinal(cardinal);
  } else if (!group.empty()) {
    target = parse_group(group);
  } else if (doc.contains("expected")) {
    source = "file";
    const json& ex = doc["expected"];
    if (ex.contains("cardinal")) {
      target = parse_cardinal(ex["cardinal"].is_string() ? ex["cardinal"].get<std::string>()
                                                         : ex["cardinal"].dump());
    } else if (ex.contains("group")) {
      target = parse_group(ex["group"].get<std::string>());
    } else {
      throw UsageError("\"expected\" needs a \"cardinal\" or \"group\" member");
    }
  } else {
    source = "predicted";
    target = predicted_target(w);
  }

  const auto verdict = verify_witness(w, *target);
  return {{"verified", verdict.verified},
          {"method", verdict.method},
          {"detail", verdict.detail},
          {"witness", witness_to_json(w)},
          {"expected", target_name(*target)},
          {"expected_source", source}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit groups of commutative rings: decision procedures and oracles", "unitring"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultFactorSeed;
  app.add_option("--seed", seed, "Seed for randomized polynomial factorization");
  bool compact = false;
  bool pretty = false;
  auto* compact_flag = app.add_flag("--json-compact", compact, "Single-line JSON (default)");
  app.add_flag("--json-pretty", pretty, "Indented JSON")->excludes(compact_flag);

  std::vector<std::string> words;
  std::string arg1;
  std::string arg2;
  std::optional<unsigned> rank;
  bool verify_flag = false;
  std::string cardinal_opt;
  std::string group_opt;

  auto* realize_cardinal_cmd =
      app.add_subcommand("realize-cardinal", "Is there a commutative ring with this many units?");
  realize_cardinal_cmd->add_option("value", arg1, "Decimal integer, inf, or aleph<k>")->required();

  auto* realize_group_cmd =
      app.add_subcommand("realize-group", "Is this finite abelian group a unit group?");
  realize_group_cmd->add_option("group", words, "Group, e.g. \"C3 x C9\" or 3,9")->required();

  auto* pgroup_cmd = app.add_subcommand("pgroup", "Decide an abelian p-group given by exponents");
  pgroup_cmd->add_option("p", arg1, "Prime")->required();
  pgroup_cmd->add_option("exponents", words, "Exponent list, e.g. 1,1,2 for C_p x C_p x C_p^2");
  pgroup_cmd->add_option("--rank", rank, "Elementary abelian group of this rank");

  auto* factor_cmd = app.add_subcommand("factor-poly", "Factor a polynomial over GF(2)");
  factor_cmd->add_option("hex", arg1, "Hex integer encoding, bit i = coefficient of x^i")
      ->required();

  auto* tensor_cmd = app.add_subcommand("tensor-split", "Field factors of GF(2^a) (x) GF(2^b)");
  tensor_cmd->add_option("a", arg1)->required();
  tensor_cmd->add_option("b", arg2)->required();
  tensor_cmd->add_flag("--verify", verify_flag, "Cross-check by explicit factorization");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a witness file by brute force");
  verify_cmd->add_option("file", arg1, "Witness JSON file")->required();
  auto* card_opt = verify_cmd->add_option("--cardinal", cardinal_opt, "Expected unit count");
  verify_cmd->add_option("--group", group_opt, "Expected unit group")->excludes(card_opt);

  auto* survey_cmd = app.add_subcommand("survey-r2m", "Enumerate the units of Z[x]/(x^2, mx)");
  survey_cmd->add_option("m", arg1)->required();

  auto* mersenne_cmd =
      app.add_subcommand("mersenne-check", "No 2^n - 1 (2 <= n <= n_max) is a perfect power");
  mersenne_cmd->add_option("n_max", arg1)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitAnswered : kExitUsage;
  }

  const FactorOptions opts{seed};
  try {
    json result;
    if (realize_cardinal_cmd->parsed()) {
      result = answer_to_json(realize_cardinal(parse_cardinal(arg1)));
    } else if (realize_group_cmd->parsed()) {
      result = cmd_realize_group(join(words), opts);
    } else if (pgroup_cmd->parsed()) {
      result = cmd_pgroup(arg1, join(words), rank);
    } else if (factor_cmd->parsed()) {
      result = cmd_factor_poly(arg1, opts);
    } else if (tensor_cmd->parsed()) {
      result = cmd_tensor_split(parse_unsigned(arg1, "a"), parse_unsigned(arg2, "b"), verify_flag,
                                opts);
    } else if (verify_cmd->parsed()) {
      result = cmd_verify(arg1, cardinal_opt, group_opt);
    } else if (survey_cmd->parsed()) {
      result = survey_to_json(r2m_unit_survey(parse_u64(arg1, "m")));
    } else if (mersenne_cmd->parsed()) {
      const unsigned n_max = parse_unsigned(arg1, "n_max");
      const bool holds = mersenne_power_check(n_max);
      result = {{"n_max", n_max}, {"no_perfect_powers", holds}};
    }
    out << (pretty ? result.dump(2) : result.dump()) << '\n';
    return kExitAnswered;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace unitring::cli
