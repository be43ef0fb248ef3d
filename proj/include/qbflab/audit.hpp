#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbflab/normalize.hpp"
#include "qbflab/skolem.hpp"

namespace qbflab {

// Two-variable function by index: bit r of `index` is the value at row r of
// the table over [a, b] (a is the high bit). XOR is 6 ("0110"), XNOR 9.
Formula two_variable_function(unsigned index, VarId a, VarId b);

// ---------------------------------------------------------------------------
// Swap criterion

struct SwapReport {
  unsigned function_index = 0;
  std::string table;  // rows 00, 01, 10, 11 over (x, y)
  bool forall_exists = false;
  bool exists_forall = false;
  bool swap_equal = false;
};

// (forall x)(exists y)[psi] against (exists y)(forall x)[psi] for all 16 psi.
std::vector<SwapReport> audit_swap_criterion();

// ---------------------------------------------------------------------------
// Residual enumeration

struct ResidualEnumeration {
  std::size_t n = 0;
  std::pair<std::size_t, std::size_t> selected_pair;  // 1-based (universal i, existential j)
  Assignment fixing;                                  // every other prefix variable
  TruthTable residual;                                // over [x_i, y_j]
};

struct ResidualOptions {
  // Restrict to pairs where x_i precedes y_j (i <= j).
  bool ordered_pairs_only = false;
};

struct ResidualSummary {
  std::uint64_t enumerated = 0;
  std::uint64_t claimed = 0;       // n^2, the count that ignores the fixings
  std::uint64_t xor_like = 0;      // residuals equal to XOR or XNOR
};

// n^2 * 2^(2n-2)
std::uint64_t expected_residual_count(std::size_t n);

ResidualSummary enumerate_residuals(const StandardFormQbf& s,
                                    const std::function<void(const ResidualEnumeration&)>& visit,
                                    ResidualOptions options = {});

// ---------------------------------------------------------------------------
// Corpus generation

enum class MatrixFamily { kExhaustive2Var, kRandomAst, kAllSmallCnf };

// Accepts EXHAUSTIVE_2VAR, RANDOM_AST, ALL_SMALL_CNF (case-insensitive,
// '-' or '_'). Throws CorpusError otherwise.
MatrixFamily parse_family(const std::string& name);
std::string to_string(MatrixFamily f);

struct CorpusParams {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  MatrixFamily family = MatrixFamily::kExhaustive2Var;
  // EXHAUSTIVE_2VAR: 0-based prefix positions; every unordered pair when empty.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::size_t count = 100;       // RANDOM_AST
  std::size_t max_depth = 4;     // RANDOM_AST
  std::size_t max_clauses = 3;   // ALL_SMALL_CNF

  nlohmann::json to_json() const;
};

struct CorpusInstance {
  std::uint64_t serial = 0;
  StandardFormQbf qbf;
};

// Standard-form instances over x1 y1 ... xn yn (ids 1..2n in prefix order).
// Deterministic for fixed params. The visitor returns false to stop early.
void generate_corpus(const CorpusParams& params, const std::function<bool(const CorpusInstance&)>& visit);
std::vector<CorpusInstance> collect_corpus(const CorpusParams& params);

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { kConfirmed, kRefuted, kNoCounterexampleFound };

// Exhaustive claims are settled by the run; open universal claims can only be
// refuted or left open.
enum class ClaimScope { kExhaustive, kOpenUniversal };

Verdict conclude(ClaimScope scope, bool found_counterexample);
std::string to_string(Verdict v);

struct Counterexample {
  std::uint64_t serial = 0;
  std::string formula_text;  // text format
  bool lhs = false;
  bool rhs = false;
};

struct AuditReport {
  std::string claim_id;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;  // sorted by serial
  double elapsed_ms = 0;
  Verdict verdict = Verdict::kNoCounterexampleFound;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

AuditReport report_from_json(const nlohmann::json& j);

// Phi against prenex(Phi') for every corpus instance (n <= 3).
AuditReport audit_phi_prime_equivalence(const CorpusParams& params);

// Re-evaluates a reported instance: (evaluate(Phi), evaluate(prenex(Phi'))).
std::pair<bool, bool> replay_phi_prime_instance(const std::string& formula_text);

AuditReport swap_criterion_report();
AuditReport residual_count_report(std::size_t n_max, ResidualOptions options = {});

// ---------------------------------------------------------------------------
// Skolem blowup

// (forall x1)...(forall xk)(exists y)[!(y ^ (x1 ^ ... ^ xk))]
PrenexQbf parity_family(std::size_t k);

struct BlowupRow {
  std::size_t k = 0;
  std::uint64_t table_bits = 0;
  std::size_t anf_size = 0;
  bool searched = false;  // witness from the exhaustive certificate search
};

// Rows k = 1..k_max. Uses the exhaustive search where the budget allows and
// row-wise extraction beyond it.
std::vector<BlowupRow> measure_skolem_blowup(std::size_t k_max, SearchBudget budget = {});
AuditReport skolem_blowup_report(std::size_t k_max);

// ---------------------------------------------------------------------------
// Exhaustive small corpora

// Every prefix over m = 2..max_vars variables (each quantifier pattern) with
// each of the 16 two-variable functions on each unordered variable pair.
void small_prefix_corpus(std::size_t max_vars, const std::function<void(const PrenexQbf&)>& visit);

// Skolem-witness existence against recursive evaluation on small_prefix_corpus.
AuditReport skolem_equivalence_report(std::size_t max_vars = 4);

// Truth preservation and shape of to_standard_form on small_prefix_corpus.
AuditReport standard_form_report(std::size_t max_vars = 3);

}  // namespace qbflab
