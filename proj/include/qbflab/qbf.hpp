#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbflab/formula.hpp"
#include "qbflab/truth_table.hpp"

namespace qbflab {

enum class Quantifier : std::uint8_t { kExists, kForall };

struct QuantifiedVar {
  Quantifier quantifier;
  VarId var;
  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

// Quantifier prefix plus quantifier-free matrix. Prefix variables are
// distinct; quantified variables absent from the matrix (dummies) are fine.
// Closedness is checked by the operations that need it.
class PrenexQbf {
 public:
  PrenexQbf(std::vector<QuantifiedVar> prefix, Formula matrix, std::map<VarId, std::string> names = {});

  const std::vector<QuantifiedVar>& prefix() const noexcept { return prefix_; }
  const Formula& matrix() const noexcept { return matrix_; }
  const std::map<VarId, std::string>& names() const noexcept { return names_; }

  // Display name, "v<id>" when none was recorded.
  std::string name_of(VarId v) const;
  std::vector<VarId> prefix_vars() const;
  std::vector<VarId> vars_with(Quantifier q) const;
  bool is_closed() const;
  // Throws OpenFormulaError naming the first free matrix variable.
  void require_closed() const;
  VarId max_var() const;

  // Same prefix quantifiers and matrix; names are not compared.
  friend bool operator==(const PrenexQbf& a, const PrenexQbf& b) {
    return a.prefix_ == b.prefix_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<QuantifiedVar> prefix_;
  Formula matrix_;
  std::map<VarId, std::string> names_;
};

// |Q| = matrix node count + prefix length.
std::size_t qbf_size(const PrenexQbf& q);

enum class HierarchySide : std::uint8_t { kSigma, kPi };

struct PrefixClass {
  std::size_t level = 0;
  HierarchySide side = HierarchySide::kSigma;
  friend bool operator==(const PrefixClass&, const PrefixClass&) = default;
};

PrefixClass classify_prefix(const PrenexQbf& q);
std::string to_string(const PrefixClass& c);

struct EvalOptions {
  // Off: both branches of every quantifier are always explored.
  bool short_circuit = true;
};

struct EvalResult {
  bool value = false;
  // Recursion nodes entered, at most 2^(m+1) - 1 for prefix length m.
  std::uint64_t visited_nodes = 0;
};

inline constexpr std::size_t kMaxEvalPrefix = 62;

// Decides truth by peeling the first quantified variable, trying both
// values, and combining with OR (exists) or AND (forall); an empty prefix
// evaluates the ground matrix.
EvalResult evaluate_qbf_counted(const PrenexQbf& q, EvalOptions options = {});

inline bool evaluate_qbf(const PrenexQbf& q, EvalOptions options = {}) {
  return evaluate_qbf_counted(q, options).value;
}

bool is_tautology(const Formula& f, const std::vector<VarId>& vars, TableLimits limits = {});

// One recursion step: drops v (which must head the prefix) and replaces it by
// Const(b) in the matrix.
PrenexQbf substitute(const PrenexQbf& q, VarId v, bool b);

}  // namespace qbflab
