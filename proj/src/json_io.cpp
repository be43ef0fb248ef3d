#include "qbflab/json_io.hpp"

#include "qbflab/errors.hpp"

namespace qbflab {

nlohmann::json certificate_to_json(const SkolemCertificate& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [target, fn] : c.functions()) {
    nlohmann::json deps = nlohmann::json::array();
    for (auto d : fn.deps) deps.push_back(d.value);
    out.push_back({{"var", target.value}, {"deps", std::move(deps)}, {"table_bits", fn.table.to_string()}});
  }
  return out;
}

SkolemCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw CertificateMismatchError("certificate must be a JSON array");
  std::map<VarId, SkolemFunction> fns;
  try {
    for (const auto& entry : j) {
      const VarId target{entry.at("var").get<std::uint32_t>()};
      std::vector<VarId> deps;
      for (const auto& d : entry.at("deps")) deps.push_back(VarId{d.get<std::uint32_t>()});
      const auto bits = entry.at("table_bits").get<std::string>();
      TruthTable table = TruthTable::from_string(deps, bits);
      if (!fns.emplace(target, SkolemFunction{target, std::move(deps), std::move(table)}).second) {
        throw CertificateMismatchError("variable " + std::to_string(target.value) + " has two functions");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw CertificateMismatchError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CertificateMismatchError(std::string("malformed certificate: ") + e.what());
  }
  return SkolemCertificate(std::move(fns));
}

nlohmann::json mapping_to_json(const std::vector<VariableMapEntry>& mapping) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : mapping) {
    out.push_back({{"new_id", e.id.value},
                   {"original_id", e.dummy ? nlohmann::json(nullptr) : nlohmann::json(e.id.value)},
                   {"name", e.name},
                   {"quantifier", e.quantifier == Quantifier::kForall ? "forall" : "exists"},
                   {"new_position", e.new_position},
                   {"original_position",
                    e.original_position ? nlohmann::json(*e.original_position) : nlohmann::json(nullptr)},
                   {"dummy", e.dummy}});
  }
  return out;
}

}  // namespace qbflab
