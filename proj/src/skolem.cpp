#include "qbflab/skolem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qbflab/errors.hpp"

namespace qbflab {

SkolemCertificate::SkolemCertificate(std::map<VarId, SkolemFunction> functions) : functions_(std::move(functions)) {
  for (const auto& [target, fn] : functions_) {
    if (fn.target != target) throw CertificateMismatchError("certificate key does not match function target");
  }
}

std::vector<VarId> skolem_dependencies(const PrenexQbf& q, VarId existential) {
  std::vector<VarId> deps;
  for (const auto& qv : q.prefix()) {
    if (qv.var == existential) {
      if (qv.quantifier != Quantifier::kExists) {
        throw CertificateMismatchError(q.name_of(existential) + " is not existentially quantified");
      }
      return deps;
    }
    if (qv.quantifier == Quantifier::kForall) deps.push_back(qv.var);
  }
  throw CertificateMismatchError(q.name_of(existential) + " is not in the prefix");
}

void check_certificate_shape(const PrenexQbf& q, const SkolemCertificate& c) {
  const auto existentials = q.vars_with(Quantifier::kExists);
  if (existentials.size() != c.functions().size()) {
    throw CertificateMismatchError("certificate covers " + std::to_string(c.functions().size()) +
                                   " variables but the formula has " + std::to_string(existentials.size()) +
                                   " existentials");
  }
  for (auto e : existentials) {
    auto it = c.functions().find(e);
    if (it == c.functions().end()) throw CertificateMismatchError("no function for " + q.name_of(e));
    const auto deps = skolem_dependencies(q, e);
    if (it->second.deps != deps) {
      throw CertificateMismatchError("function for " + q.name_of(e) + " has the wrong dependency list");
    }
    if (it->second.table.var_order() != deps) {
      throw CertificateMismatchError("table for " + q.name_of(e) + " is not over its dependencies");
    }
  }
}

Formula skolem_substitute(const PrenexQbf& q, const SkolemCertificate& c) {
  check_certificate_shape(q, c);
  std::map<VarId, Formula> images;
  for (const auto& [target, fn] : c.functions()) images.emplace(target, truth_table_to_anf(fn.table).to_formula());
  return substitute_vars(q.matrix(), images);
}

bool verify_certificate(const PrenexQbf& q, const SkolemCertificate& c, TableLimits limits) {
  const Formula ground = skolem_substitute(q, c);
  return is_tautology(ground, q.vars_with(Quantifier::kForall), limits);
}

double certificate_space_log2(const PrenexQbf& q) {
  double log2 = 0;
  std::size_t universals = 0;
  for (const auto& qv : q.prefix()) {
    if (qv.quantifier == Quantifier::kForall) {
      ++universals;
    } else {
      log2 += std::ldexp(1.0, static_cast<int>(universals));
    }
  }
  return log2;
}

std::uint64_t max_skolem_size(const PrenexQbf& q) {
  std::uint64_t best = 0;
  std::size_t universals = 0;
  for (const auto& qv : q.prefix()) {
    if (qv.quantifier == Quantifier::kForall) {
      ++universals;
    } else {
      best = std::max<std::uint64_t>(best, std::uint64_t{1} << std::min<std::size_t>(universals, 63));
    }
  }
  return best;
}

namespace {

// Tables are packed into one word, so a Skolem function may depend on at
// most 5 universals (32 rows).
constexpr std::size_t kMaxSearchDeps = 5;

struct ExistentialSlot {
  VarId var;
  std::size_t prefix_pos;
  std::vector<VarId> deps;
  std::vector<std::size_t> dep_universal_index;  // index into the universal list
  std::uint64_t tables = 0;                      // 2^(2^|deps|)
};

std::size_t word_anf_size(std::uint64_t table, std::size_t arity) {
  std::vector<std::uint64_t> w{table};
  moebius_transform(w, arity);
  return static_cast<std::size_t>(std::popcount(w[0]));
}

class CertificateSearch {
 public:
  CertificateSearch(const PrenexQbf& q, std::optional<std::size_t> size_bound, SearchBudget budget)
      : matrix_(q.matrix(), q.prefix_vars()), size_bound_(size_bound) {
    const double space = certificate_space_log2(q);
    if (space > budget.max_log2_candidates) throw BudgetExceededError(space, budget.max_log2_candidates);

    for (std::size_t pos = 0; pos < q.prefix().size(); ++pos) {
      const auto& qv = q.prefix()[pos];
      if (qv.quantifier == Quantifier::kForall) {
        universal_pos_.push_back(pos);
        continue;
      }
      if (universal_pos_.size() > kMaxSearchDeps) throw ArityOverflowError(universal_pos_.size(), kMaxSearchDeps);
      ExistentialSlot slot{qv.var, pos, {}, {}, 0};
      for (std::size_t u = 0; u < universal_pos_.size(); ++u) {
        slot.deps.push_back(q.prefix()[universal_pos_[u]].var);
        slot.dep_universal_index.push_back(u);
      }
      slot.tables = std::uint64_t{1} << (std::uint64_t{1} << slot.deps.size());
      existentials_.push_back(std::move(slot));
    }
    if (universal_pos_.size() > kDefaultArityCap) throw ArityOverflowError(universal_pos_.size(), kDefaultArityCap);
  }

  WitnessResult run() {
    WitnessResult result;
    std::vector<std::uint64_t> choice(existentials_.size(), 0);
    for (std::size_t i = 0; i < existentials_.size(); ++i) {
      if (!seek(i, choice[i])) return result;
    }
    while (true) {
      ++result.candidates_checked;
      if (verifies(choice)) {
        result.value = true;
        result.certificate = build(choice);
        return result;
      }
      // odometer, last existential fastest
      std::size_t i = existentials_.size();
      while (i > 0) {
        --i;
        ++choice[i];
        if (seek(i, choice[i])) break;
        choice[i] = 0;
        seek(i, choice[i]);
        if (i == 0) return result;
      }
      if (existentials_.empty()) return result;
    }
  }

 private:
  // Advances t to the next admissible table of slot i; false when exhausted.
  bool seek(std::size_t i, std::uint64_t& t) const {
    const auto& e = existentials_[i];
    for (; t < e.tables; ++t) {
      if (!size_bound_ || word_anf_size(t, e.deps.size()) <= *size_bound_) return true;
    }
    return false;
  }

  bool verifies(const std::vector<std::uint64_t>& choice) const {
    const std::size_t u = universal_pos_.size();
    const std::uint64_t combos = std::uint64_t{1} << u;
    for (std::uint64_t combo = 0; combo < combos; ++combo) {
      std::uint64_t bits = 0;
      for (std::size_t j = 0; j < u; ++j) {
        if ((combo >> j) & 1u) bits |= std::uint64_t{1} << universal_pos_[j];
      }
      for (std::size_t i = 0; i < existentials_.size(); ++i) {
        const auto& e = existentials_[i];
        std::uint64_t row = 0;
        for (auto idx : e.dep_universal_index) row = (row << 1) | ((combo >> idx) & 1u);
        if ((choice[i] >> row) & 1u) bits |= std::uint64_t{1} << e.prefix_pos;
      }
      if (!matrix_.eval(bits)) return false;
    }
    return true;
  }

  SkolemCertificate build(const std::vector<std::uint64_t>& choice) const {
    std::map<VarId, SkolemFunction> fns;
    for (std::size_t i = 0; i < existentials_.size(); ++i) {
      const auto& e = existentials_[i];
      fns.emplace(e.var, SkolemFunction{e.var, e.deps, TruthTable::from_word(e.deps, choice[i])});
    }
    return SkolemCertificate(std::move(fns));
  }

  CompiledFormula matrix_;
  std::optional<std::size_t> size_bound_;
  std::vector<std::size_t> universal_pos_;
  std::vector<ExistentialSlot> existentials_;
};

}  // namespace

WitnessResult exists_skolem_witness(const PrenexQbf& q, SearchBudget budget) {
  q.require_closed();
  return CertificateSearch(q, std::nullopt, budget).run();
}

WitnessResult bounded_skolem_witness(const PrenexQbf& q, std::size_t size_bound, SearchBudget budget) {
  q.require_closed();
  return CertificateSearch(q, size_bound, budget).run();
}

std::optional<SkolemFunction> trailing_existential_witness(const PrenexQbf& q, TableLimits limits) {
  q.require_closed();
  const auto& prefix = q.prefix();
  if (prefix.empty() || prefix.back().quantifier != Quantifier::kExists ||
      q.vars_with(Quantifier::kExists).size() != 1) {
    throw PrefixError("row-wise witness extraction needs a single, innermost existential");
  }
  const VarId target = prefix.back().var;
  std::vector<VarId> deps = q.vars_with(Quantifier::kForall);
  TruthTable table(deps, limits);
  std::vector<VarId> slots = deps;
  slots.push_back(target);
  const CompiledFormula matrix(q.matrix(), slots);
  const std::size_t k = deps.size();
  const std::uint64_t target_bit = std::uint64_t{1} << k;
  for (std::uint64_t row = 0; row < table.rows(); ++row) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((row >> (k - 1 - i)) & 1u) bits |= std::uint64_t{1} << i;
    }
    if (matrix.eval(bits)) continue;  // value 0 works
    if (!matrix.eval(bits | target_bit)) return std::nullopt;
    table.set(row, true);
  }
  return SkolemFunction{target, std::move(deps), std::move(table)};
}

}  // namespace qbflab
