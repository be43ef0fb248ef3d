#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbflab/qbf.hpp"

namespace qbflab {

// Prenex formula with prefix exactly (forall x1)(exists y1)...(forall xn)(exists yn).
class StandardFormQbf {
 public:
  // Throws PrefixError if q's prefix does not have that shape or n == 0.
  static StandardFormQbf from_prenex(PrenexQbf q);

  const PrenexQbf& qbf() const noexcept { return qbf_; }
  std::size_t n() const noexcept { return pairing_.size(); }
  // (x_i, y_i) for i = 1..n.
  const std::vector<std::pair<VarId, VarId>>& pairing() const noexcept { return pairing_; }

 private:
  StandardFormQbf(PrenexQbf q, std::vector<std::pair<VarId, VarId>> pairing)
      : qbf_(std::move(q)), pairing_(std::move(pairing)) {}

  PrenexQbf qbf_;
  std::vector<std::pair<VarId, VarId>> pairing_;
};

struct VariableMapEntry {
  VarId id;
  std::string name;
  Quantifier quantifier;
  std::size_t new_position;
  std::optional<std::size_t> original_position;  // empty for dummies
  bool dummy = false;
};

struct StandardFormResult {
  StandardFormQbf standard;
  std::vector<VariableMapEntry> mapping;  // one entry per output prefix slot
};

// Inserts dummies left to right: a leading forall dummy (named α) if the
// prefix opens with exists, a splitting dummy (β, β2, ...) between two
// adjacent same-quantifier variables, and a trailing exists dummy (γ) when
// the length is odd. Original ids are kept; dummies get fresh ids.
StandardFormResult to_standard_form(const PrenexQbf& q);

// One quantified conjunct of the transformed formula: pairs start..n are
// replaced by fresh universals/existentials, pairs before start keep the
// outer variables.
struct PhiPrimeClause {
  std::size_t start;                    // 1-based pair index j, 2 <= j <= n
  std::vector<VarId> hatted_universals;  // for pairs j..n
  std::vector<VarId> fresh_existentials;
  Formula body;
};

struct PhiPrime {
  std::vector<VarId> outer_universals;
  std::vector<VarId> outer_existentials;
  Formula base;  // the original matrix
  // Ordered j = n down to 2.
  std::vector<PhiPrimeClause> clauses;
  std::map<VarId, std::string> names;

  std::size_t conjunct_count() const noexcept { return 1 + clauses.size(); }
};

PhiPrime build_phi_prime(const StandardFormQbf& s);

enum class HatSharing {
  kRenamedApart,  // each clause keeps its own fresh variables
  kShared,        // one hatted/fresh variable per pair index across clauses
};

// (forall outer x)(exists outer y)(forall hats)(exists fresh)[base & clause bodies].
PrenexQbf prenex_phi_prime(const PhiPrime& p, HatSharing sharing = HatSharing::kRenamedApart);

}  // namespace qbflab
