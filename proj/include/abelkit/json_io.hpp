#pragma once

#include <json.hpp>

#include "abelkit/classify.hpp"
#include "abelkit/endring.hpp"
#include "abelkit/group.hpp"
#include "abelkit/harness.hpp"
#include "abelkit/morphism.hpp"
#include "abelkit/report.hpp"

namespace abelkit {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in int64, decimal strings
/// otherwise; both forms parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// Groups travel as their canonical expression, e.g. "Z^2 + Z/4".
Json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

/// {"source": expr, "target": expr, "matrix": [...]} with the matrix emitted
/// flat in row-major order. Parsing accepts flat or nested rows.
Json morphism_to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);
/// Compact single-line form of morphism_to_json, for replay commands.
std::string morphism_json_string(const Morphism& f);

Json report_to_json(const PropertyReport& r);
Json classification_to_json(const Classification& c);
Json discrepancies_to_json(const std::vector<Discrepancy>& list);
Json torsion_family_to_json(const TorsionFamilyClassification& c);
Json transfer_to_json(const TransferReport& r);
Json suite_result_to_json(const SuiteResult& r);

}  // namespace abelkit
