#include "qbflab/formula.hpp"

#include <stdexcept>

#include "qbflab/errors.hpp"

namespace qbflab {

Formula Formula::constant(bool bit) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::kConst, bit, VarId{}, {}}));
}

Formula Formula::variable(VarId v) {
  if (v.value == 0) throw std::invalid_argument("variable ids are 1-based");
  return Formula(std::make_shared<const Node>(Node{NodeKind::kVar, false, v, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::kNot, false, VarId{}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) throw std::invalid_argument("conjunction needs at least one operand");
  if (children.size() == 1) return std::move(children.front());
  return Formula(std::make_shared<const Node>(Node{NodeKind::kAnd, false, VarId{}, std::move(children)}));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) throw std::invalid_argument("disjunction needs at least one operand");
  if (children.size() == 1) return std::move(children.front());
  return Formula(std::make_shared<const Node>(Node{NodeKind::kOr, false, VarId{}, std::move(children)}));
}

Formula Formula::exclusive_or(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::kXor, false, VarId{}, {std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::kConst:
      return a.constant_value() == b.constant_value();
    case NodeKind::kVar:
      return a.var() == b.var();
    default:
      break;
  }
  auto ca = a.children();
  auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

bool Assignment::get(VarId v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw MissingVariableError(v.value);
  return it->second;
}

bool eval_formula(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case NodeKind::kConst:
      return f.constant_value();
    case NodeKind::kVar:
      return a.get(f.var());
    case NodeKind::kNot:
      return !eval_formula(f.children()[0], a);
    case NodeKind::kAnd: {
      // Evaluate every operand so a missing variable is always reported.
      bool acc = true;
      for (const auto& c : f.children()) acc = eval_formula(c, a) && acc;
      return acc;
    }
    case NodeKind::kOr: {
      bool acc = false;
      for (const auto& c : f.children()) acc = eval_formula(c, a) || acc;
      return acc;
    }
    case NodeKind::kXor:
      return eval_formula(f.children()[0], a) != eval_formula(f.children()[1], a);
  }
  return false;
}

namespace {

void collect_variables(const Formula& f, std::set<VarId>& out) {
  if (f.kind() == NodeKind::kVar) {
    out.insert(f.var());
    return;
  }
  for (const auto& c : f.children()) collect_variables(c, out);
}

}  // namespace

std::set<VarId> variables(const Formula& f) {
  std::set<VarId> out;
  collect_variables(f, out);
  return out;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f.children()) n += node_count(c);
  return n;
}

Formula substitute_vars(const Formula& f, const std::map<VarId, Formula>& images) {
  switch (f.kind()) {
    case NodeKind::kConst:
      return f;
    case NodeKind::kVar: {
      auto it = images.find(f.var());
      return it == images.end() ? f : it->second;
    }
    case NodeKind::kNot:
      return Formula::negation(substitute_vars(f.children()[0], images));
    case NodeKind::kXor:
      return Formula::exclusive_or(substitute_vars(f.children()[0], images),
                                   substitute_vars(f.children()[1], images));
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const auto& c : f.children()) kids.push_back(substitute_vars(c, images));
      return f.kind() == NodeKind::kAnd ? Formula::conjunction(std::move(kids))
                                        : Formula::disjunction(std::move(kids));
    }
  }
  return f;
}

CompiledFormula::CompiledFormula(const Formula& f, std::span<const VarId> slots) {
  if (slots.size() > 64) throw ArityOverflowError(slots.size(), 64);
  std::map<VarId, std::uint32_t> slot_of;
  for (std::uint32_t i = 0; i < slots.size(); ++i) slot_of.emplace(slots[i], i);
  emit(f, slot_of);
}

void CompiledFormula::emit(const Formula& f, const std::map<VarId, std::uint32_t>& slot_of) {
  const std::size_t at = ops_.size();
  switch (f.kind()) {
    case NodeKind::kConst:
      ops_.push_back({NodeKind::kConst, f.constant_value() ? 1u : 0u, 1});
      return;
    case NodeKind::kVar: {
      auto it = slot_of.find(f.var());
      if (it == slot_of.end()) throw OpenFormulaError(f.var().value);
      ops_.push_back({NodeKind::kVar, it->second, 1});
      return;
    }
    default:
      break;
  }
  ops_.push_back({f.kind(), static_cast<std::uint32_t>(f.children().size()), 0});
  for (const auto& c : f.children()) emit(c, slot_of);
  ops_[at].size = static_cast<std::uint32_t>(ops_.size() - at);
}

bool CompiledFormula::eval_at(std::size_t pos, std::uint64_t bits) const {
  const Op& op = ops_[pos];
  switch (op.kind) {
    case NodeKind::kConst:
      return op.arg != 0;
    case NodeKind::kVar:
      return (bits >> op.arg) & 1u;
    case NodeKind::kNot:
      return !eval_at(pos + 1, bits);
    case NodeKind::kXor: {
      const std::size_t rhs = pos + 1 + ops_[pos + 1].size;
      return eval_at(pos + 1, bits) != eval_at(rhs, bits);
    }
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      const bool stop_on = op.kind == NodeKind::kOr;
      std::size_t child = pos + 1;
      for (std::uint32_t i = 0; i < op.arg; ++i) {
        if (eval_at(child, bits) == stop_on) return stop_on;
        child += ops_[child].size;
      }
      return !stop_on;
    }
  }
  return false;
}

}  // namespace qbflab
