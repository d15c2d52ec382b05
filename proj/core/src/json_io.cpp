#include "unitring/json_io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "unitring/errors.hpp"

namespace unitring {

namespace {

std::string hex32(AlgebraVector v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

AlgebraVector parse_hex32(const nlohmann::json& j) {
  if (!j.is_string()) throw UsageError("expected a hex string in algebra JSON");
  const std::string s = j.get<std::string>();
  std::string_view digits = s;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
  if (digits.empty() || digits.size() > 8) throw UsageError("bad hex value '" + s + "'");
  AlgebraVector v = 0;
  for (char c : digits) {
    v <<= 4;
    if (c >= '0' && c <= '9') {
      v |= static_cast<AlgebraVector>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v |= static_cast<AlgebraVector>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v |= static_cast<AlgebraVector>(c - 'A' + 10);
    } else {
      throw UsageError("bad hex value '" + s + "'");
    }
  }
  return v;
}

template <class T>
T require(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string(what) + " is missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string(what) + " has a malformed \"" + key + "\"");
  }
}

}  // namespace

Cardinal parse_cardinal(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "infinite") {
    return InfiniteCardinal{"aleph_0"};
  }
  if (text.starts_with("aleph")) {
    std::string_view index = text.substr(5);
    if (!index.empty() && index.front() == '_') index.remove_prefix(1);
    if (!index.empty() && parse_u128(index)) {
      return InfiniteCardinal{"aleph_" + std::string(index)};
    }
    throw UsageError("malformed infinite cardinal '" + std::string(text) + "'");
  }
  const auto value = parse_u128(text);
  if (!value || *value > UINT64_MAX) {
    throw UsageError("expected a 64-bit decimal integer, 'inf' or 'aleph<k>', got '" +
                     std::string(text) + "'");
  }
  return FiniteCardinal{static_cast<std::uint64_t>(*value)};
}

nlohmann::json witness_to_json(const WitnessRing& w) {
  nlohmann::json j;
  j["description"] = describe(w);
  if (const auto* p = std::get_if<ProductOfFields>(&w)) {
    auto degrees = p->degrees;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    j["type"] = "product_of_fields";
    j["degrees"] = degrees;
  } else if (const auto* e = std::get_if<EvenUnitRing>(&w)) {
    j["type"] = "even_unit_ring";
    j["m"] = e->m;
  } else {
    j["type"] = "rational_function_field";
    j["cardinal"] = std::get<RationalFunctionField>(w).cardinal_label;
  }
  return j;
}

WitnessRing witness_from_json(const nlohmann::json& j) {
  const auto type = require<std::string>(j, "type", "witness");
  WitnessRing w;
  if (type == "product_of_fields") {
    auto degrees = require<std::vector<unsigned>>(j, "degrees", "witness");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    w = ProductOfFields{std::move(degrees)};
  } else if (type == "even_unit_ring") {
    w = EvenUnitRing{require<std::uint64_t>(j, "m", "witness")};
  } else if (type == "rational_function_field") {
    w = RationalFunctionField{require<std::string>(j, "cardinal", "witness")};
  } else {
    throw UsageError("unknown witness type '" + type + "'");
  }
  try {
    validate_witness(w);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid witness: ") + e.what());
  }
  return w;
}

nlohmann::json certificate_to_json(const OddCertificate& c) {
  auto exps = c.exponents;
  std::sort(exps.begin(), exps.end(), std::greater<>());
  u128 product = 1;
  std::string factors;
  for (unsigned n : exps) {
    product *= mersenne(n);
    if (!factors.empty()) factors += " * ";
    factors += "(2^" + std::to_string(n) + " - 1)";
  }
  return {{"exponents", exps}, {"product", to_string(product)},
          {"form", factors.empty() ? "empty product" : factors}};
}

nlohmann::json answer_to_json(const RealizabilityAnswer& a) {
  nlohmann::json j;
  j["realizable"] = a.realizable;
  if (a.witness) j["witness"] = witness_to_json(*a.witness);
  if (a.certificate) j["certificate"] = certificate_to_json(*a.certificate);
  if (!a.reason.empty()) j["reason"] = a.reason;
  return j;
}

nlohmann::json order_statistics_to_json(const OrderStatistics& stats) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [order, count] : stats) j[std::to_string(order)] = count;
  return j;
}

nlohmann::json survey_to_json(const UnitSurvey& survey) {
  return {{"count", survey.count}, {"orders", order_statistics_to_json(survey.orders)}};
}

nlohmann::json group_to_json(const AbelianGroup& g) {
  nlohmann::json primary = nlohmann::json::array();
  for (const auto& [p, e] : g.primary()) primary.push_back({p, e});
  return {{"primary", primary}, {"order", to_string(g.order())}, {"name", g.to_string()}};
}

nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.mul_table()) {
    nlohmann::json r = nlohmann::json::array();
    for (AlgebraVector v : row) r.push_back(hex32(v));
    rows.push_back(std::move(r));
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : a.field_blocks()) blocks.push_back({{"offset", b.offset}, {"degree", b.degree}});
  return {{"dim", a.dim()},
          {"basis_labels", a.basis_labels()},
          {"mul_table", rows},
          {"one", hex32(a.one())},
          {"field_blocks", blocks}};
}

FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  const auto dim = require<unsigned>(j, "dim", "algebra");
  auto labels = require<std::vector<std::string>>(j, "basis_labels", "algebra");
  if (labels.size() != dim) throw UsageError("algebra basis_labels length differs from dim");
  if (!j.contains("mul_table") || !j["mul_table"].is_array()) {
    throw UsageError("algebra is missing \"mul_table\"");
  }
  std::vector<std::vector<AlgebraVector>> table;
  for (const auto& row : j["mul_table"]) {
    if (!row.is_array()) throw UsageError("algebra mul_table rows must be arrays");
    std::vector<AlgebraVector> r;
    for (const auto& v : row) r.push_back(parse_hex32(v));
    table.push_back(std::move(r));
  }
  if (!j.contains("one")) throw UsageError("algebra is missing \"one\"");
  const AlgebraVector one = parse_hex32(j["one"]);
  std::vector<FieldBlock> blocks;
  if (j.contains("field_blocks")) {
    for (const auto& b : j["field_blocks"]) {
      blocks.push_back({require<unsigned>(b, "offset", "field block"),
                        require<unsigned>(b, "degree", "field block")});
    }
  }
  return {std::move(labels), std::move(table), one, std::move(blocks)};
}

}  // namespace unitring
