#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "qbflab/normalize.hpp"
#include "qbflab/skolem.hpp"

namespace qbflab {

// [{"var": id, "deps": [ids], "table_bits": "0110"}, ...] in target order;
// table_bits lists rows 0..2^|deps|-1 with deps[0] as the high bit.
nlohmann::json certificate_to_json(const SkolemCertificate& c);

// Throws CertificateMismatchError on malformed entries.
SkolemCertificate certificate_from_json(const nlohmann::json& j);

// [{"new_id", "original_id" (null for dummies), "name", "quantifier",
//   "new_position", "original_position", "dummy"}, ...]
nlohmann::json mapping_to_json(const std::vector<VariableMapEntry>& mapping);

}  // namespace qbflab
