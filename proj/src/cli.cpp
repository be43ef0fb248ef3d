#include "qbflab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "qbflab/audit.hpp"
#include "qbflab/errors.hpp"
#include "qbflab/json_io.hpp"
#include "qbflab/normalize.hpp"
#include "qbflab/qdimacs.hpp"
#include "qbflab/skolem.hpp"
#include "qbflab/text_format.hpp"

namespace qbflab {
namespace {

// Bad input that is not a parse failure: unreadable files, bad JSON.
class InputError : public QbfError {
 public:
  using QbfError::QbfError;
};

struct InputOptions {
  std::string path = "-";
  std::string format = "text";
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

PrenexQbf load(const InputOptions& opts, std::istream& in) {
  const std::string text = read_all(opts.path, in);
  return opts.format == "qdimacs" ? parse_qdimacs(text) : parse_qbf_text(text);
}

nlohmann::json load_json(const std::string& path, std::istream& in) {
  try {
    return nlohmann::json::parse(read_all(path, in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void add_input(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("input", opts.path, "Input file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"text", "qdimacs"}))
      ->capture_default_str();
}

std::string render(const PrenexQbf& q, const std::string& notation) {
  return notation == "math" ? print_qbf_math(q) + "\n" : print_qbf(q);
}

StandardFormQbf standardize(const PrenexQbf& q) {
  try {
    return StandardFormQbf::from_prenex(q);
  } catch (const PrefixError&) {
    return to_standard_form(q).standard;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantified boolean formula laboratory", "qbflab"};
  app.require_subcommand(1);

  InputOptions input;
  std::string notation = "text";
  bool no_short_circuit = false;
  bool stats = false;
  std::string mapping_out;
  bool shared_hats = false;
  double budget_log2 = SearchBudget{}.max_log2_candidates;
  std::string cert_path;
  std::string cert_out;
  std::size_t bound = 0;

  auto* eval = app.add_subcommand("eval", "Decide truth by recursive quantifier expansion");
  add_input(eval, input);
  eval->add_flag("--no-short-circuit", no_short_circuit, "Explore both branches of every quantifier");
  eval->add_flag("--stats", stats, "Report visited recursion nodes on stderr");

  auto* classify = app.add_subcommand("classify", "Print the SIGMA/PI level of the prefix");
  add_input(classify, input);

  auto* normalize = app.add_subcommand("normalize", "Convert to forall/exists alternating standard form");
  add_input(normalize, input);
  normalize->add_option("--notation", notation)->check(CLI::IsMember({"text", "math"}));
  normalize->add_option("--mapping", mapping_out, "Write the variable mapping JSON here");

  auto* phi = app.add_subcommand("phi-prime", "Build and prenex the four-block transformed formula");
  add_input(phi, input);
  phi->add_option("--notation", notation)->check(CLI::IsMember({"text", "math"}));
  phi->add_flag("--shared-hats", shared_hats, "Share hatted variables across conjuncts");

  auto* skolemize = app.add_subcommand("skolemize", "Search for a Skolem certificate");
  add_input(skolemize, input);
  skolemize->add_option("--budget", budget_log2, "log2 of the largest certificate space to search");
  skolemize->add_option("--cert-out", cert_out, "Write the certificate JSON here");

  auto* verify = app.add_subcommand("verify-cert", "Check a Skolem certificate");
  add_input(verify, input);
  verify->add_option("--cert", cert_path, "Certificate JSON")->required();

  auto* bounded = app.add_subcommand("bounded-skolem", "Search for Skolem functions of bounded ANF size");
  add_input(bounded, input);
  bounded->add_option("--bound", bound, "Largest allowed ANF monomial count")->required();
  bounded->add_option("--budget", budget_log2, "log2 of the largest certificate space to search");

  std::string claim;
  CorpusParams corpus;
  std::string family = "EXHAUSTIVE_2VAR";
  std::vector<std::size_t> pair;
  std::size_t k_max = 10;
  std::size_t n_max = 3;
  std::size_t max_vars = 0;
  bool ordered_pairs_only = false;
  std::string report_out;
  auto* audit = app.add_subcommand("audit", "Run one audit and emit its JSON report");
  audit->add_option("claim", claim, "Claim id")
      ->required()
      ->check(CLI::IsMember({"swap-criterion", "residual-count", "phi-prime-equivalence", "skolem-blowup",
                             "skolem-equivalence", "standard-form"}));
  audit->add_option("--seed", corpus.seed, "Corpus seed")->capture_default_str();
  audit->add_option("--n", corpus.n, "Pair count of corpus instances")->capture_default_str();
  audit->add_option("--family", family, "EXHAUSTIVE_2VAR, RANDOM_AST or ALL_SMALL_CNF")->capture_default_str();
  audit->add_option("--pair", pair, "Two 0-based prefix positions for EXHAUSTIVE_2VAR")->expected(2);
  audit->add_option("--count", corpus.count, "RANDOM_AST instance count")->capture_default_str();
  audit->add_option("--max-depth", corpus.max_depth, "RANDOM_AST tree depth")->capture_default_str();
  audit->add_option("--max-clauses", corpus.max_clauses, "ALL_SMALL_CNF clause bound")->capture_default_str();
  audit->add_option("--k-max", k_max, "Largest parity arity for skolem-blowup")->capture_default_str();
  audit->add_option("--n-max", n_max, "Largest pair count for residual-count")->capture_default_str();
  audit->add_option("--max-vars", max_vars, "Prefix length bound for the small-prefix corpora");
  audit->add_flag("--ordered-pairs-only", ordered_pairs_only, "residual-count: only pairs with i <= j");
  audit->add_option("--out", report_out, "Write the report here instead of stdout");

  std::string replay_path = "-";
  auto* replay = app.add_subcommand("replay", "Re-evaluate the counterexamples of a phi-prime-equivalence report");
  replay->add_option("report", replay_path, "Report JSON, '-' for stdin");

  std::vector<std::string> argv_store{"qbflab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  try {
    if (eval->parsed()) {
      const auto q = load(input, in);
      const auto r = evaluate_qbf_counted(q, EvalOptions{!no_short_circuit});
      out << (r.value ? "TRUE" : "FALSE") << "\n";
      if (stats) err << "visited_nodes " << r.visited_nodes << "\n";
      return r.value ? exit_code::kTrue : exit_code::kFalse;
    }
    if (classify->parsed()) {
      out << to_string(classify_prefix(load(input, in))) << "\n";
      return 0;
    }
    if (normalize->parsed()) {
      const auto result = to_standard_form(load(input, in));
      out << render(result.standard.qbf(), notation);
      if (!mapping_out.empty()) write_file(mapping_out, mapping_to_json(result.mapping).dump(2) + "\n");
      return 0;
    }
    if (phi->parsed()) {
      const auto s = standardize(load(input, in));
      const auto p = prenex_phi_prime(build_phi_prime(s), shared_hats ? HatSharing::kShared : HatSharing::kRenamedApart);
      out << render(p, notation);
      return 0;
    }
    if (skolemize->parsed()) {
      const auto r = exists_skolem_witness(load(input, in), SearchBudget{budget_log2});
      out << (r.value ? "TRUE" : "FALSE") << "\n";
      if (r.certificate) {
        const auto cert = certificate_to_json(*r.certificate).dump(2) + "\n";
        out << cert;
        if (!cert_out.empty()) write_file(cert_out, cert);
      }
      return r.value ? exit_code::kTrue : exit_code::kFalse;
    }
    if (verify->parsed()) {
      const auto q = load(input, in);
      const auto cert = certificate_from_json(load_json(cert_path, in));
      const bool ok = verify_certificate(q, cert);
      out << (ok ? "VALID" : "INVALID") << "\n";
      return ok ? exit_code::kTrue : exit_code::kFalse;
    }
    if (bounded->parsed()) {
      const auto q = load(input, in);
      const bool ok = bounded_skolem_decision(q, bound, SearchBudget{budget_log2});
      out << (ok ? "TRUE" : "FALSE") << "\n";
      return ok ? exit_code::kTrue : exit_code::kFalse;
    }
    if (audit->parsed()) {
      corpus.family = parse_family(family);
      if (!pair.empty()) corpus.pair = std::make_pair(pair[0], pair[1]);
      AuditReport report;
      if (claim == "swap-criterion") {
        report = swap_criterion_report();
      } else if (claim == "residual-count") {
        report = residual_count_report(n_max, ResidualOptions{ordered_pairs_only});
      } else if (claim == "phi-prime-equivalence") {
        report = audit_phi_prime_equivalence(corpus);
      } else if (claim == "skolem-blowup") {
        report = skolem_blowup_report(k_max);
      } else if (claim == "skolem-equivalence") {
        report = skolem_equivalence_report(max_vars ? max_vars : 4);
      } else {
        report = standard_form_report(max_vars ? max_vars : 3);
      }
      const std::string text = report.to_json().dump(2) + "\n";
      if (report_out.empty()) {
        out << text;
      } else {
        write_file(report_out, text);
      }
      return report.verdict == Verdict::kRefuted ? exit_code::kFalse : 0;
    }
    if (replay->parsed()) {
      const auto report = report_from_json(load_json(replay_path, in));
      if (report.claim_id != "phi-prime-equivalence") throw InputError("replay supports phi-prime-equivalence reports");
      std::size_t mismatches = 0;
      for (const auto& c : report.counterexamples) {
        const auto [lhs, rhs] = replay_phi_prime_instance(c.formula_text);
        const bool same = lhs == c.lhs && rhs == c.rhs;
        mismatches += !same;
        out << c.serial << ' ' << lhs << ' ' << rhs << ' ' << (same ? "REPRODUCED" : "MISMATCH") << "\n";
      }
      return mismatches ? exit_code::kFalse : 0;
    }
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_code::kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const QbfError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
  return exit_code::kUsage;
}

}  // namespace qbflab
