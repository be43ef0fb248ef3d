#include "qbflab/qbf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qbflab/errors.hpp"

namespace qbflab {

PrenexQbf::PrenexQbf(std::vector<QuantifiedVar> prefix, Formula matrix, std::map<VarId, std::string> names)
    : prefix_(std::move(prefix)), matrix_(std::move(matrix)), names_(std::move(names)) {
  std::set<VarId> seen;
  for (const auto& qv : prefix_) {
    if (qv.var.value == 0) throw PrefixError("variable ids are 1-based");
    if (!seen.insert(qv.var).second) {
      throw PrefixError("variable " + name_of(qv.var) + " is quantified twice");
    }
  }
}

std::string PrenexQbf::name_of(VarId v) const {
  auto it = names_.find(v);
  return it != names_.end() ? it->second : "v" + std::to_string(v.value);
}

std::vector<VarId> PrenexQbf::prefix_vars() const {
  std::vector<VarId> out;
  out.reserve(prefix_.size());
  for (const auto& qv : prefix_) out.push_back(qv.var);
  return out;
}

std::vector<VarId> PrenexQbf::vars_with(Quantifier q) const {
  std::vector<VarId> out;
  for (const auto& qv : prefix_) {
    if (qv.quantifier == q) out.push_back(qv.var);
  }
  return out;
}

bool PrenexQbf::is_closed() const {
  const auto bound = prefix_vars();
  const std::set<VarId> bound_set(bound.begin(), bound.end());
  const auto used = variables(matrix_);
  return std::includes(bound_set.begin(), bound_set.end(), used.begin(), used.end());
}

void PrenexQbf::require_closed() const {
  const auto bound = prefix_vars();
  const std::set<VarId> bound_set(bound.begin(), bound.end());
  for (auto v : variables(matrix_)) {
    if (!bound_set.contains(v)) throw OpenFormulaError(v.value);
  }
}

VarId PrenexQbf::max_var() const {
  VarId top{0};
  for (const auto& qv : prefix_) top = std::max(top, qv.var);
  for (auto v : variables(matrix_)) top = std::max(top, v);
  return top;
}

std::size_t qbf_size(const PrenexQbf& q) { return node_count(q.matrix()) + q.prefix().size(); }

PrefixClass classify_prefix(const PrenexQbf& q) {
  PrefixClass c;
  const auto& prefix = q.prefix();
  if (prefix.empty()) return c;
  c.side = prefix.front().quantifier == Quantifier::kExists ? HierarchySide::kSigma : HierarchySide::kPi;
  c.level = 1;
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    if (prefix[i].quantifier != prefix[i - 1].quantifier) ++c.level;
  }
  return c;
}

std::string to_string(const PrefixClass& c) {
  if (c.level == 0) return "GROUND 0";
  return std::string(c.side == HierarchySide::kSigma ? "SIGMA " : "PI ") + std::to_string(c.level);
}

namespace {

class RecursiveEvaluator {
 public:
  RecursiveEvaluator(const PrenexQbf& q, EvalOptions options)
      : prefix_(q.prefix()), matrix_(q.matrix(), q.prefix_vars()), options_(options) {}

  bool run(std::size_t depth, std::uint64_t bits) {
    ++visited_;
    if (depth == prefix_.size()) return matrix_.eval(bits);
    const bool exists = prefix_[depth].quantifier == Quantifier::kExists;
    const bool low = run(depth + 1, bits);
    // exists settles on the first 1, forall on the first 0
    if (options_.short_circuit && low == exists) return low;
    const bool high = run(depth + 1, bits | (std::uint64_t{1} << depth));
    return exists ? (low || high) : (low && high);
  }

  std::uint64_t visited() const noexcept { return visited_; }

 private:
  const std::vector<QuantifiedVar>& prefix_;
  CompiledFormula matrix_;
  EvalOptions options_;
  std::uint64_t visited_ = 0;
};

}  // namespace

EvalResult evaluate_qbf_counted(const PrenexQbf& q, EvalOptions options) {
  q.require_closed();
  if (q.prefix().size() > kMaxEvalPrefix) throw ArityOverflowError(q.prefix().size(), kMaxEvalPrefix);
  RecursiveEvaluator ev(q, options);
  EvalResult r;
  r.value = ev.run(0, 0);
  r.visited_nodes = ev.visited();
  return r;
}

bool is_tautology(const Formula& f, const std::vector<VarId>& vars, TableLimits limits) {
  return formula_to_truth_table(f, vars, limits).all_ones();
}

PrenexQbf substitute(const PrenexQbf& q, VarId v, bool b) {
  if (q.prefix().empty() || q.prefix().front().var != v) {
    throw PrefixError("variable " + q.name_of(v) + " is not first in the prefix");
  }
  std::vector<QuantifiedVar> rest(q.prefix().begin() + 1, q.prefix().end());
  auto names = q.names();
  names.erase(v);
  return PrenexQbf(std::move(rest), substitute_vars(q.matrix(), {{v, Formula::constant(b)}}), std::move(names));
}

}  // namespace qbflab
