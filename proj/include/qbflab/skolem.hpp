#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qbflab/qbf.hpp"
#include "qbflab/truth_table.hpp"

namespace qbflab {

// Function for one existential variable over the universals that precede it.
struct SkolemFunction {
  VarId target;
  std::vector<VarId> deps;
  TruthTable table;  // var_order == deps

  friend bool operator==(const SkolemFunction&, const SkolemFunction&) = default;
};

class SkolemCertificate {
 public:
  SkolemCertificate() = default;
  explicit SkolemCertificate(std::map<VarId, SkolemFunction> functions);

  const std::map<VarId, SkolemFunction>& functions() const noexcept { return functions_; }
  const SkolemFunction& at(VarId target) const { return functions_.at(target); }
  bool empty() const noexcept { return functions_.empty(); }

  friend bool operator==(const SkolemCertificate&, const SkolemCertificate&) = default;

 private:
  std::map<VarId, SkolemFunction> functions_;
};

// Universals preceding `existential` in prefix order.
std::vector<VarId> skolem_dependencies(const PrenexQbf& q, VarId existential);

// Throws CertificateMismatchError unless c covers exactly q's existentials
// with correctly shaped functions.
void check_certificate_shape(const PrenexQbf& q, const SkolemCertificate& c);

// Matrix over q's universals with each existential replaced by the ANF
// rendering of its table.
Formula skolem_substitute(const PrenexQbf& q, const SkolemCertificate& c);

bool verify_certificate(const PrenexQbf& q, const SkolemCertificate& c, TableLimits limits = {});

struct SearchBudget {
  // Searches refuse certificate spaces larger than 2^max_log2_candidates.
  double max_log2_candidates = 20.0;
};

struct WitnessResult {
  bool value = false;
  std::optional<SkolemCertificate> certificate;
  std::uint64_t candidates_checked = 0;
};

// log2 of the number of certificates: sum over existentials of 2^u_i.
double certificate_space_log2(const PrenexQbf& q);

// Largest possible ANF size over q's Skolem functions: max of 2^u_i.
std::uint64_t max_skolem_size(const PrenexQbf& q);

// Exhaustive search in lexicographic certificate order: existentials in
// prefix order with the first one varying slowest, each table enumerated as
// the integers 0..2^(2^u)-1 where bit r is row r. Returns the first
// verifying certificate. Throws BudgetExceededError, and ArityOverflowError
// when a function would depend on more than 5 universals.
WitnessResult exists_skolem_witness(const PrenexQbf& q, SearchBudget budget = {});

// Same search restricted to functions with anf_size <= size_bound.
WitnessResult bounded_skolem_witness(const PrenexQbf& q, std::size_t size_bound, SearchBudget budget = {});

inline bool bounded_skolem_decision(const PrenexQbf& q, std::size_t size_bound, SearchBudget budget = {}) {
  return bounded_skolem_witness(q, size_bound, budget).value;
}

// For a formula whose only existential is the last prefix variable, builds
// the witness row by row (smallest satisfying value per universal row)
// without enumerating tables. Returns nullopt if some row has no value.
std::optional<SkolemFunction> trailing_existential_witness(const PrenexQbf& q, TableLimits limits = {});

}  // namespace qbflab
