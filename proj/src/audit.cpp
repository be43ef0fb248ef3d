#include "qbflab/audit.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>

#include "qbflab/errors.hpp"
#include "qbflab/text_format.hpp"

namespace qbflab {
namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VarId x_id(std::size_t i) { return VarId{static_cast<std::uint32_t>(2 * i - 1)}; }
VarId y_id(std::size_t i) { return VarId{static_cast<std::uint32_t>(2 * i)}; }

// (forall x1)(exists y1)...(forall xn)(exists yn)[matrix]
StandardFormQbf standard_instance(std::size_t n, Formula matrix) {
  std::vector<QuantifiedVar> prefix;
  std::map<VarId, std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    prefix.push_back({Quantifier::kForall, x_id(i)});
    prefix.push_back({Quantifier::kExists, y_id(i)});
    names[x_id(i)] = "x" + std::to_string(i);
    names[y_id(i)] = "y" + std::to_string(i);
  }
  return StandardFormQbf::from_prenex(PrenexQbf(std::move(prefix), std::move(matrix), std::move(names)));
}

Formula random_formula(std::mt19937_64& rng, std::size_t depth, std::size_t nvars) {
  if (depth == 0 || rng() % 3 == 0) {
    if (rng() % 10 == 0) return Formula::constant(rng() % 2 == 1);
    return Formula::variable(VarId{static_cast<std::uint32_t>(1 + rng() % nvars)});
  }
  switch (rng() % 4) {
    case 0:
      return Formula::negation(random_formula(rng, depth - 1, nvars));
    case 1:
      return Formula::exclusive_or(random_formula(rng, depth - 1, nvars), random_formula(rng, depth - 1, nvars));
    default: {
      const bool conj = rng() % 2 == 0;
      std::vector<Formula> kids;
      const std::size_t arity = 2 + rng() % 2;
      for (std::size_t i = 0; i < arity; ++i) kids.push_back(random_formula(rng, depth - 1, nvars));
      return conj ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
    }
  }
}

// Non-tautological nonempty clauses over vars 1..nvars, base-3 digit per
// variable (0 absent, 1 positive, 2 negative).
std::vector<Formula> all_clauses(std::size_t nvars) {
  std::vector<Formula> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Formula> lits;
    std::size_t rest = code;
    for (std::uint32_t v = 1; v <= nvars; ++v, rest /= 3) {
      const std::size_t digit = rest % 3;
      if (digit == 0) continue;
      Formula var = Formula::variable(VarId{v});
      lits.push_back(digit == 1 ? var : Formula::negation(var));
    }
    out.push_back(Formula::disjunction(std::move(lits)));
  }
  return out;
}


Counterexample make_counterexample(std::uint64_t serial, const PrenexQbf& q, bool lhs, bool rhs) {
  return {serial, print_qbf(q), lhs, rhs};
}

void finish(AuditReport& report, ClaimScope scope, const Stopwatch& clock) {
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.serial < b.serial; });
  report.verdict = conclude(scope, !report.counterexamples.empty());
  report.elapsed_ms = clock.elapsed_ms();
}

Formula unary_function(unsigned index, VarId a) { return truth_table_to_anf(TruthTable::from_word({a}, index)).to_formula(); }

}  // namespace

Formula two_variable_function(unsigned index, VarId a, VarId b) {
  if (index > 15) throw std::invalid_argument("two-variable function index must be below 16");
  return truth_table_to_anf(TruthTable::from_word({a, b}, index)).to_formula();
}

// ---------------------------------------------------------------------------

std::vector<SwapReport> audit_swap_criterion() {
  const VarId x{1};
  const VarId y{2};
  const std::map<VarId, std::string> names{{x, "x"}, {y, "y"}};
  std::vector<SwapReport> out;
  for (unsigned i = 0; i < 16; ++i) {
    const Formula psi = two_variable_function(i, x, y);
    SwapReport r;
    r.function_index = i;
    r.table = TruthTable::from_word({x, y}, i).to_string();
    r.forall_exists = evaluate_qbf(PrenexQbf({{Quantifier::kForall, x}, {Quantifier::kExists, y}}, psi, names));
    r.exists_forall = evaluate_qbf(PrenexQbf({{Quantifier::kExists, y}, {Quantifier::kForall, x}}, psi, names));
    r.swap_equal = r.forall_exists == r.exists_forall;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t expected_residual_count(std::size_t n) {
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(n) * n << (2 * n - 2);
}

ResidualSummary enumerate_residuals(const StandardFormQbf& s,
                                    const std::function<void(const ResidualEnumeration&)>& visit,
                                    ResidualOptions options) {
  const PrenexQbf& q = s.qbf();
  q.require_closed();
  const std::size_t n = s.n();
  if (2 * n - 2 > 40) throw ArityOverflowError(2 * n - 2, 40);
  const auto all = q.prefix_vars();
  ResidualSummary summary;
  summary.claimed = static_cast<std::uint64_t>(n) * n;

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (options.ordered_pairs_only && i > j) continue;
      const VarId xi = s.pairing()[i - 1].first;
      const VarId yj = s.pairing()[j - 1].second;
      std::vector<VarId> others;
      for (auto v : all) {
        if (v != xi && v != yj) others.push_back(v);
      }
      std::vector<VarId> slots = others;
      slots.push_back(xi);
      slots.push_back(yj);
      const CompiledFormula matrix(q.matrix(), slots);
      const std::size_t m = others.size();
      const std::uint64_t xi_bit = std::uint64_t{1} << m;
      const std::uint64_t yj_bit = std::uint64_t{1} << (m + 1);

      for (std::uint64_t fixing = 0; fixing < (std::uint64_t{1} << m); ++fixing) {
        // others[t] takes bit (m - 1 - t) of the fixing counter
        std::uint64_t base = 0;
        for (std::size_t t = 0; t < m; ++t) {
          if ((fixing >> (m - 1 - t)) & 1u) base |= std::uint64_t{1} << t;
        }
        std::uint64_t word = 0;
        for (std::uint64_t row = 0; row < 4; ++row) {
          const std::uint64_t bits = base | ((row & 2) ? xi_bit : 0) | ((row & 1) ? yj_bit : 0);
          if (matrix.eval(bits)) word |= std::uint64_t{1} << row;
        }
        ++summary.enumerated;
        if (word == 6 || word == 9) ++summary.xor_like;
        if (visit) {
          ResidualEnumeration r{n, {i, j}, {}, TruthTable::from_word({xi, yj}, word)};
          for (std::size_t t = 0; t < m; ++t) r.fixing.set(others[t], (base >> t) & 1u);
          visit(r);
        }
      }
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------

MatrixFamily parse_family(const std::string& name) {
  std::string key;
  for (char c : name) key += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (key == "EXHAUSTIVE_2VAR") return MatrixFamily::kExhaustive2Var;
  if (key == "RANDOM_AST") return MatrixFamily::kRandomAst;
  if (key == "ALL_SMALL_CNF") return MatrixFamily::kAllSmallCnf;
  throw CorpusError("unknown matrix family '" + name + "'");
}

std::string to_string(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::kExhaustive2Var: return "EXHAUSTIVE_2VAR";
    case MatrixFamily::kRandomAst: return "RANDOM_AST";
    case MatrixFamily::kAllSmallCnf: return "ALL_SMALL_CNF";
  }
  return "?";
}

nlohmann::json CorpusParams::to_json() const {
  nlohmann::json j{{"seed", seed}, {"n", n}, {"family", to_string(family)}};
  switch (family) {
    case MatrixFamily::kExhaustive2Var:
      j["pair"] = pair ? nlohmann::json::array({pair->first, pair->second}) : nlohmann::json("all");
      break;
    case MatrixFamily::kRandomAst:
      j["count"] = count;
      j["max_depth"] = max_depth;
      break;
    case MatrixFamily::kAllSmallCnf:
      j["max_clauses"] = max_clauses;
      break;
  }
  return j;
}

void generate_corpus(const CorpusParams& params, const std::function<bool(const CorpusInstance&)>& visit) {
  const std::size_t n = params.n;
  if (n == 0 || n > 16) throw CorpusError("corpus pair count must be between 1 and 16");
  const std::size_t nvars = 2 * n;
  std::uint64_t serial = 0;
  auto emit = [&](Formula matrix) { return visit(CorpusInstance{serial++, standard_instance(n, std::move(matrix))}); };
  auto var_at = [](std::size_t pos) { return VarId{static_cast<std::uint32_t>(pos + 1)}; };

  switch (params.family) {
    case MatrixFamily::kExhaustive2Var: {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      if (params.pair) {
        const auto [a, b] = *params.pair;
        if (a >= nvars || b >= nvars || a == b) throw CorpusError("variable pair out of range");
        pairs.push_back(*params.pair);
      } else {
        for (std::size_t a = 0; a < nvars; ++a) {
          for (std::size_t b = a + 1; b < nvars; ++b) pairs.emplace_back(a, b);
        }
      }
      for (const auto& [a, b] : pairs) {
        for (unsigned f = 0; f < 16; ++f) {
          if (!emit(two_variable_function(f, var_at(a), var_at(b)))) return;
        }
      }
      return;
    }
    case MatrixFamily::kRandomAst: {
      std::mt19937_64 rng(params.seed);
      for (std::size_t i = 0; i < params.count; ++i) {
        if (!emit(random_formula(rng, params.max_depth, nvars))) return;
      }
      return;
    }
    case MatrixFamily::kAllSmallCnf: {
      if (nvars > 8) throw CorpusError("ALL_SMALL_CNF supports at most 4 pairs");
      const auto clauses = all_clauses(nvars);
      const std::size_t total = clauses.size();
      // every strictly increasing index tuple of length 1..max_clauses
      for (std::size_t size = 1; size <= params.max_clauses && size <= total; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
          std::vector<Formula> picked;
          for (auto i : idx) picked.push_back(clauses[i]);
          if (!emit(Formula::conjunction(std::move(picked)))) return;
          std::size_t k = size;
          while (k > 0 && idx[k - 1] == total - size + (k - 1)) --k;
          if (k == 0) break;
          ++idx[k - 1];
          for (std::size_t t = k; t < size; ++t) idx[t] = idx[t - 1] + 1;
        }
      }
      return;
    }
  }
  throw CorpusError("unknown matrix family");
}

std::vector<CorpusInstance> collect_corpus(const CorpusParams& params) {
  std::vector<CorpusInstance> out;
  generate_corpus(params, [&](const CorpusInstance& inst) {
    out.push_back(inst);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

Verdict conclude(ClaimScope scope, bool found_counterexample) {
  if (found_counterexample) return Verdict::kRefuted;
  return scope == ClaimScope::kExhaustive ? Verdict::kConfirmed : Verdict::kNoCounterexampleFound;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kNoCounterexampleFound: return "NO_COUNTEREXAMPLE_FOUND";
  }
  return "?";
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ces.push_back({{"serial", c.serial}, {"formula_text", c.formula_text}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"claim_id", claim_id},
          {"params", params},
          {"seed", seed},
          {"instances_checked", instances_checked},
          {"counterexamples", std::move(ces)},
          {"elapsed_ms", elapsed_ms},
          {"verdict", to_string(verdict)},
          {"details", details}};
}

AuditReport report_from_json(const nlohmann::json& j) {
  AuditReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.params = j.at("params");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "CONFIRMED") {
    r.verdict = Verdict::kConfirmed;
  } else if (verdict == "REFUTED") {
    r.verdict = Verdict::kRefuted;
  } else if (verdict == "NO_COUNTEREXAMPLE_FOUND") {
    r.verdict = Verdict::kNoCounterexampleFound;
  } else {
    throw QbfError("unknown verdict '" + verdict + "'");
  }
  for (const auto& c : j.at("counterexamples")) {
    r.counterexamples.push_back({c.value("serial", std::uint64_t{0}), c.at("formula_text").get<std::string>(),
                                 c.at("lhs").get<bool>(), c.at("rhs").get<bool>()});
  }
  if (j.contains("details")) r.details = j.at("details");
  return r;
}

// ---------------------------------------------------------------------------

AuditReport audit_phi_prime_equivalence(const CorpusParams& params) {
  if (params.n > 3) throw CorpusError("the equivalence audit evaluates at most n = 3");
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "phi-prime-equivalence";
  report.params = params.to_json();
  report.seed = params.seed;

  std::uint64_t lhs_true = 0;
  std::uint64_t shared_differs = 0;
  std::uint64_t shared_disagrees_lhs = 0;
  generate_corpus(params, [&](const CorpusInstance& inst) {
    const bool lhs = evaluate_qbf(inst.qbf.qbf());
    const PhiPrime phi = build_phi_prime(inst.qbf);
    const bool rhs = evaluate_qbf(prenex_phi_prime(phi, HatSharing::kRenamedApart));
    const bool shared = evaluate_qbf(prenex_phi_prime(phi, HatSharing::kShared));
    ++report.instances_checked;
    lhs_true += lhs;
    shared_differs += shared != rhs;
    shared_disagrees_lhs += shared != lhs;
    if (lhs != rhs) report.counterexamples.push_back(make_counterexample(inst.serial, inst.qbf.qbf(), lhs, rhs));
    return true;
  });

  report.details = {{"phi_true", lhs_true},
                    {"degenerate_n1", params.n == 1},
                    {"shared_hat_variant",
                     {{"differs_from_renamed_apart", shared_differs}, {"disagrees_with_phi", shared_disagrees_lhs}}}};
  finish(report, ClaimScope::kOpenUniversal, clock);
  return report;
}

std::pair<bool, bool> replay_phi_prime_instance(const std::string& formula_text) {
  const auto s = StandardFormQbf::from_prenex(parse_qbf_text(formula_text));
  return {evaluate_qbf(s.qbf()), evaluate_qbf(prenex_phi_prime(build_phi_prime(s)))};
}

AuditReport swap_criterion_report() {
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "swap-criterion";
  const auto entries = audit_swap_criterion();
  nlohmann::json rows = nlohmann::json::array();
  std::size_t unequal = 0;
  for (const auto& e : entries) {
    ++report.instances_checked;
    rows.push_back({{"function_index", e.function_index},
                    {"table", e.table},
                    {"forall_exists", e.forall_exists},
                    {"exists_forall", e.exists_forall},
                    {"swap_equal", e.swap_equal}});
    unequal += !e.swap_equal;
    const bool xor_like = e.table == "0110" || e.table == "1001";
    if (e.swap_equal == xor_like) {
      const PrenexQbf q({{Quantifier::kForall, VarId{1}}, {Quantifier::kExists, VarId{2}}},
                        two_variable_function(e.function_index, VarId{1}, VarId{2}),
                        {{VarId{1}, "x"}, {VarId{2}, "y"}});
      report.counterexamples.push_back(make_counterexample(e.function_index, q, e.forall_exists, e.exists_forall));
    }
  }
  report.details = {{"entries", std::move(rows)}, {"swap_equal", entries.size() - unequal}, {"swap_unequal", unequal}};
  finish(report, ClaimScope::kExhaustive, clock);
  return report;
}

AuditReport residual_count_report(std::size_t n_max, ResidualOptions options) {
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "residual-count";
  report.params = {{"n_max", n_max}, {"ordered_pairs_only", options.ordered_pairs_only}};
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    // parity of every variable: each residual is XOR or XNOR
    std::vector<VarId> vars;
    for (std::uint32_t v = 1; v <= 2 * n; ++v) vars.push_back(VarId{v});
    Formula matrix = Formula::variable(vars.back());
    for (std::size_t i = vars.size() - 1; i-- > 0;) matrix = Formula::exclusive_or(Formula::variable(vars[i]), matrix);
    const auto s = standard_instance(n, matrix);
    const auto summary = enumerate_residuals(s, nullptr, options);
    const std::uint64_t expected = expected_residual_count(n);
    ++report.instances_checked;
    rows.push_back({{"n", n},
                    {"enumerated", summary.enumerated},
                    {"expected", expected},
                    {"claimed", summary.claimed},
                    {"xor_like", summary.xor_like}});
    if (!options.ordered_pairs_only && summary.enumerated != expected) {
      report.counterexamples.push_back(make_counterexample(n, s.qbf(), true, false));
    }
  }
  report.details = {{"rows", std::move(rows)}};
  finish(report, ClaimScope::kExhaustive, clock);
  return report;
}

// ---------------------------------------------------------------------------

PrenexQbf parity_family(std::size_t k) {
  if (k == 0) throw std::invalid_argument("parity family needs k >= 1");
  std::vector<QuantifiedVar> prefix;
  std::map<VarId, std::string> names;
  for (std::uint32_t i = 1; i <= k; ++i) {
    prefix.push_back({Quantifier::kForall, VarId{i}});
    names[VarId{i}] = "x" + std::to_string(i);
  }
  const VarId y{static_cast<std::uint32_t>(k + 1)};
  prefix.push_back({Quantifier::kExists, y});
  names[y] = "y";
  Formula parity = Formula::variable(VarId{static_cast<std::uint32_t>(k)});
  for (std::uint32_t i = static_cast<std::uint32_t>(k) - 1; i >= 1; --i) {
    parity = Formula::exclusive_or(Formula::variable(VarId{i}), parity);
  }
  Formula matrix = Formula::negation(Formula::exclusive_or(Formula::variable(y), parity));
  return PrenexQbf(std::move(prefix), std::move(matrix), std::move(names));
}

std::vector<BlowupRow> measure_skolem_blowup(std::size_t k_max, SearchBudget budget) {
  if (k_max > kDefaultArityCap) throw ArityOverflowError(k_max, kDefaultArityCap);
  std::vector<BlowupRow> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const PrenexQbf q = parity_family(k);
    const VarId y{static_cast<std::uint32_t>(k + 1)};
    BlowupRow row;
    row.k = k;
    std::optional<SkolemFunction> fn;
    if (certificate_space_log2(q) <= budget.max_log2_candidates) {
      const auto result = exists_skolem_witness(q, budget);
      if (result.certificate) fn = result.certificate->at(y);
      row.searched = true;
    } else {
      fn = trailing_existential_witness(q);
    }
    if (!fn) throw QbfError("parity family instance has no Skolem witness");
    row.table_bits = fn->table.rows();
    row.anf_size = anf_size(truth_table_to_anf(fn->table));
    rows.push_back(row);
  }
  return rows;
}

AuditReport skolem_blowup_report(std::size_t k_max) {
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "skolem-blowup";
  report.params = {{"k_max", k_max}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : measure_skolem_blowup(k_max)) {
    ++report.instances_checked;
    rows.push_back({{"k", r.k}, {"table_bits", r.table_bits}, {"anf_size", r.anf_size}, {"searched", r.searched}});
    if (r.table_bits != (std::uint64_t{1} << r.k) || r.anf_size != r.k) {
      report.counterexamples.push_back(make_counterexample(r.k, parity_family(r.k), true, false));
    }
  }
  report.details = {{"rows", std::move(rows)}};
  finish(report, ClaimScope::kExhaustive, clock);
  return report;
}

// ---------------------------------------------------------------------------

void small_prefix_corpus(std::size_t max_vars, const std::function<void(const PrenexQbf&)>& visit) {
  for (std::size_t m = 0; m <= max_vars; ++m) {
    std::map<VarId, std::string> names;
    for (std::uint32_t v = 1; v <= m; ++v) names[VarId{v}] = "v" + std::to_string(v);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << m); ++pattern) {
      std::vector<QuantifiedVar> prefix;
      for (std::uint32_t v = 1; v <= m; ++v) {
        prefix.push_back({((pattern >> (v - 1)) & 1u) ? Quantifier::kForall : Quantifier::kExists, VarId{v}});
      }
      if (m == 0) {
        visit(PrenexQbf(prefix, Formula::constant(false), names));
        visit(PrenexQbf(prefix, Formula::constant(true), names));
      } else if (m == 1) {
        for (unsigned f = 0; f < 4; ++f) visit(PrenexQbf(prefix, unary_function(f, VarId{1}), names));
      } else {
        for (std::uint32_t a = 1; a <= m; ++a) {
          for (std::uint32_t b = a + 1; b <= m; ++b) {
            for (unsigned f = 0; f < 16; ++f) {
              visit(PrenexQbf(prefix, two_variable_function(f, VarId{a}, VarId{b}), names));
            }
          }
        }
      }
    }
  }
}

AuditReport skolem_equivalence_report(std::size_t max_vars) {
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "skolem-equivalence";
  report.params = {{"max_vars", max_vars}};
  std::uint64_t true_count = 0;
  small_prefix_corpus(max_vars, [&](const PrenexQbf& q) {
    const std::uint64_t serial = report.instances_checked++;
    const bool lhs = evaluate_qbf(q);
    const auto witness = exists_skolem_witness(q);
    bool rhs = witness.value;
    if (witness.certificate && !verify_certificate(q, *witness.certificate)) rhs = false;
    true_count += lhs;
    if (lhs != rhs) report.counterexamples.push_back(make_counterexample(serial, q, lhs, rhs));
  });
  report.details = {{"true_instances", true_count}};
  finish(report, ClaimScope::kExhaustive, clock);
  return report;
}

AuditReport standard_form_report(std::size_t max_vars) {
  Stopwatch clock;
  AuditReport report;
  report.claim_id = "standard-form";
  report.params = {{"max_vars", max_vars}};
  std::uint64_t dummies = 0;
  small_prefix_corpus(max_vars, [&](const PrenexQbf& q) {
    const std::uint64_t serial = report.instances_checked++;
    const auto result = to_standard_form(q);
    const PrenexQbf& s = result.standard.qbf();
    const bool lhs = evaluate_qbf(q);
    const bool rhs = evaluate_qbf(s);
    const auto cls = classify_prefix(s);
    const bool shape_ok = s.prefix().size() % 2 == 0 && s.prefix().size() <= 2 * q.prefix().size() + 2 &&
                          cls.side == HierarchySide::kPi && cls.level == s.prefix().size();
    for (const auto& e : result.mapping) dummies += e.dummy;
    if (lhs != rhs || !shape_ok) report.counterexamples.push_back(make_counterexample(serial, q, lhs, rhs));
  });

  const PrenexQbf example = parse_qbf_text("exists x y\nforall z\nx | y | z\n");
  report.details = {{"dummies_inserted", dummies},
                    {"worked_example", print_qbf_math(to_standard_form(example).standard.qbf())}};
  finish(report, ClaimScope::kExhaustive, clock);
  return report;
}

}  // namespace qbflab
