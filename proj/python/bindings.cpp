#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbflab/audit.hpp"
#include "qbflab/errors.hpp"
#include "qbflab/json_io.hpp"
#include "qbflab/normalize.hpp"
#include "qbflab/qdimacs.hpp"
#include "qbflab/skolem.hpp"
#include "qbflab/text_format.hpp"

namespace py = pybind11;
using namespace qbflab;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qbflab, m) {
  m.doc() = "Quantified boolean formula laboratory: evaluation, Skolem search, normalization, audits";

  auto& base = py::register_exception<QbfError>(m, "QbfError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", base.ptr());

  py::class_<PrenexQbf>(m, "PrenexQbf")
      .def_property_readonly("prefix",
                             [](const PrenexQbf& q) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& qv : q.prefix()) {
                                 out.emplace_back(qv.quantifier == Quantifier::kForall ? "forall" : "exists",
                                                  q.name_of(qv.var));
                               }
                               return out;
                             })
      .def("math", &print_qbf_math)
      .def("size", &qbf_size)
      .def("__str__", &print_qbf)
      .def("__eq__", [](const PrenexQbf& a, const PrenexQbf& b) { return alpha_equivalent(a, b); });

  m.def("parse_qbf_text", &parse_qbf_text, py::arg("text"));
  m.def("parse_qdimacs", &parse_qdimacs, py::arg("text"));
  m.def("print_qbf", &print_qbf, py::arg("q"));
  m.def("print_qdimacs", &print_qdimacs, py::arg("q"));

  m.def(
      "evaluate_qbf",
      [](const PrenexQbf& q, bool short_circuit) {
        const auto r = evaluate_qbf_counted(q, EvalOptions{short_circuit});
        return std::make_pair(r.value, r.visited_nodes);
      },
      py::arg("q"), py::arg("short_circuit") = true, "Returns (value, visited_nodes).");
  m.def(
      "classify_prefix",
      [](const PrenexQbf& q) {
        const auto c = classify_prefix(q);
        return std::make_pair(std::string(c.side == HierarchySide::kSigma ? "SIGMA" : "PI"), c.level);
      },
      py::arg("q"));
  m.def(
      "substitute",
      [](const PrenexQbf& q, bool bit) {
        if (q.prefix().empty()) throw PrefixError("empty prefix");
        return substitute(q, q.prefix().front().var, bit);
      },
      py::arg("q"), py::arg("bit"), "Fixes the first prefix variable.");

  m.def(
      "_to_standard_form",
      [](const PrenexQbf& q) {
        auto r = to_standard_form(q);
        return std::make_pair(r.standard.qbf(), dump(mapping_to_json(r.mapping)));
      },
      py::arg("q"));
  m.def(
      "phi_prime",
      [](const PrenexQbf& standard, bool shared_hats) {
        return prenex_phi_prime(build_phi_prime(StandardFormQbf::from_prenex(standard)),
                                shared_hats ? HatSharing::kShared : HatSharing::kRenamedApart);
      },
      py::arg("standard"), py::arg("shared_hats") = false);

  m.def(
      "_exists_skolem_witness",
      [](const PrenexQbf& q, double budget) {
        const auto r = exists_skolem_witness(q, SearchBudget{budget});
        return std::make_pair(r.value, r.certificate ? dump(certificate_to_json(*r.certificate)) : std::string());
      },
      py::arg("q"), py::arg("budget") = SearchBudget{}.max_log2_candidates);
  m.def(
      "_verify_certificate",
      [](const PrenexQbf& q, const std::string& cert) {
        return verify_certificate(q, certificate_from_json(nlohmann::json::parse(cert)));
      },
      py::arg("q"), py::arg("certificate_json"));
  m.def(
      "bounded_skolem_decision",
      [](const PrenexQbf& q, std::size_t bound, double budget) {
        return bounded_skolem_decision(q, bound, SearchBudget{budget});
      },
      py::arg("q"), py::arg("bound"), py::arg("budget") = SearchBudget{}.max_log2_candidates);

  m.def("matrix_truth_table", [](const PrenexQbf& q) {
    return formula_to_truth_table(q.matrix(), q.prefix_vars()).to_string();
  });
  m.def(
      "anf_size",
      [](const std::string& bits) {
        std::size_t k = 0;
        while ((std::size_t{1} << k) < bits.size()) ++k;
        std::vector<VarId> order;
        for (std::uint32_t v = 1; v <= k; ++v) order.push_back(VarId{v});
        return anf_size(truth_table_to_anf(TruthTable::from_string(order, bits)));
      },
      py::arg("table_bits"));

  m.def("_swap_criterion_report", [] { return dump(swap_criterion_report().to_json()); });
  m.def(
      "_residual_count_report", [](std::size_t n_max) { return dump(residual_count_report(n_max).to_json()); },
      py::arg("n_max"));
  m.def(
      "_skolem_blowup_report", [](std::size_t k_max) { return dump(skolem_blowup_report(k_max).to_json()); },
      py::arg("k_max"));
  m.def(
      "_phi_prime_equivalence_report",
      [](std::uint64_t seed, std::size_t n, const std::string& family, std::size_t count, std::size_t max_depth,
         std::size_t max_clauses) {
        CorpusParams p;
        p.seed = seed;
        p.n = n;
        p.family = parse_family(family);
        p.count = count;
        p.max_depth = max_depth;
        p.max_clauses = max_clauses;
        return dump(audit_phi_prime_equivalence(p).to_json());
      },
      py::arg("seed"), py::arg("n"), py::arg("family"), py::arg("count"), py::arg("max_depth"),
      py::arg("max_clauses"));
  m.def("replay_phi_prime_instance", &replay_phi_prime_instance, py::arg("formula_text"));
}
