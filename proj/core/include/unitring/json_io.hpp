#pragma once

// Stable JSON shapes shared by the CLI and fixture files. Objects are
// emitted with sorted keys (nlohmann::json's default map), so a parse and
// re-emit is byte-identical.

#include <string_view>

#include <nlohmann/json.hpp>

#include "unitring/abgroup.hpp"
#include "unitring/oracle.hpp"
#include "unitring/realize.hpp"

namespace unitring {

// Decimal integer, "inf", "infinity", "aleph<k>" or "aleph_<k>".
// Throws UsageError naming the token otherwise.
Cardinal parse_cardinal(std::string_view text);

nlohmann::json witness_to_json(const WitnessRing& w);
// Throws UsageError on a malformed object.
WitnessRing witness_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const OddCertificate& c);
nlohmann::json answer_to_json(const RealizabilityAnswer& a);

// {"<order>": count, ...}
nlohmann::json order_statistics_to_json(const OrderStatistics& stats);
nlohmann::json survey_to_json(const UnitSurvey& survey);

// [[p, e], ...] plus the printable form.
nlohmann::json group_to_json(const AbelianGroup& g);

// {"dim", "basis_labels", "mul_table": rows of hex strings, "one", "field_blocks"}
nlohmann::json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace unitring
