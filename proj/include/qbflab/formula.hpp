#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace qbflab {

// 1-based variable identifier.
struct VarId {
  std::uint32_t value = 0;

  constexpr VarId() = default;
  constexpr explicit VarId(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const VarId&) const = default;
};

enum class NodeKind : std::uint8_t { kConst, kVar, kNot, kAnd, kOr, kXor };

// Immutable boolean expression tree. Nodes are shared, so copies are cheap.
//
// The n-ary builders collapse a single operand to the operand itself, so an
// And/Or node always has at least two children.
class Formula {
 public:
  static Formula constant(bool bit);
  static Formula variable(VarId v);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula exclusive_or(Formula lhs, Formula rhs);

  NodeKind kind() const noexcept { return node_->kind; }
  bool constant_value() const noexcept { return node_->bit; }
  VarId var() const noexcept { return node_->var; }
  std::span<const Formula> children() const noexcept { return node_->children; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    NodeKind kind;
    bool bit = false;
    VarId var;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Total map from variables to bits over whatever set it was built for.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const VarId, bool>> init) : values_(init) {}

  void set(VarId v, bool bit) { values_[v] = bit; }
  bool contains(VarId v) const { return values_.contains(v); }
  // Throws MissingVariableError when v is unassigned.
  bool get(VarId v) const;
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<VarId, bool>& values() const noexcept { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<VarId, bool> values_;
};

bool eval_formula(const Formula& f, const Assignment& a);

std::set<VarId> variables(const Formula& f);

std::size_t node_count(const Formula& f);

// Replaces every occurrence of a mapped variable by its image. Images are not
// rewritten again.
Formula substitute_vars(const Formula& f, const std::map<VarId, Formula>& images);

// Flattened formula for hot loops: variables are bound to slots 0..63 and an
// assignment is a bit word (bit i = value of slot i).
class CompiledFormula {
 public:
  // Throws OpenFormulaError if f mentions a variable not listed in slots, and
  // ArityOverflowError if more than 64 slots are requested.
  CompiledFormula(const Formula& f, std::span<const VarId> slots);

  bool eval(std::uint64_t bits) const { return eval_at(0, bits); }

 private:
  struct Op {
    NodeKind kind;
    std::uint32_t arg;   // slot, constant bit, or child count
    std::uint32_t size;  // length of this subtree in ops
  };
  void emit(const Formula& f, const std::map<VarId, std::uint32_t>& slot_of);
  bool eval_at(std::size_t pos, std::uint64_t bits) const;

  std::vector<Op> ops_;
};

}  // namespace qbflab

template <>
struct std::hash<qbflab::VarId> {
  std::size_t operator()(const qbflab::VarId& v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};
