#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qbflab/cli.hpp"

using namespace qbflab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qbflab_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    auto r = run({"eval"}, "forall x\nexists y\nx ^ y\n");
    CHECK(r.code == 0);
    CHECK(r.out == "TRUE\n");
    r = run({"eval", "--stats", "--no-short-circuit"}, "exists y\nforall x\nx ^ y\n");
    CHECK(r.code == 1);
    CHECK(r.out == "FALSE\n");
    CHECK(r.err == "visited_nodes 7\n");
    r = run({"eval", "--format", "qdimacs"}, "p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
    CHECK(r.code == 0);
  }

  TEST_CASE("exit codes for errors") {
    CHECK(run({}).code == exit_code::kUsage);
    CHECK(run({"frobnicate"}).code == exit_code::kUsage);
    CHECK(run({"eval", "--format", "xml"}).code == exit_code::kUsage);
    auto r = run({"eval"}, "forall x\nx & ");
    CHECK(r.code == exit_code::kInput);
    CHECK(r.err.find("2:5") != std::string::npos);
    CHECK(run({"eval", "/nonexistent/file"}).code == exit_code::kInput);
    CHECK(run({"skolemize"}, "forall a b c d e\nexists y\ny").code == exit_code::kBudget);
    CHECK(run({"skolemize", "--budget", "40"}, "forall a b c d e\nexists y\n!y").code == 0);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("classify, normalize and phi-prime") {
    CHECK(run({"classify"}, "exists x y\nforall z\nx|y|z").out == "SIGMA 2\n");
    const auto mapping = temp_path("mapping.json");
    auto r = run({"normalize", "--notation", "math", "--mapping", mapping}, "exists x\nexists y\nforall z\nx | y | z");
    CHECK(r.code == 0);
    CHECK(r.out == "(∀α)(∃x)(∀β)(∃y)(∀z)(∃γ)[x∨y∨z]\n");
    std::ifstream mf(mapping);
    const auto j = nlohmann::json::parse(mf);
    CHECK(j.size() == 6);
    CHECK(j[0]["dummy"] == true);
    CHECK(j[1]["name"] == "x");
    CHECK(j[1]["original_position"] == 0);
    r = run({"phi-prime"}, "forall x1\nexists y1\nforall x2\nexists y2\nx1 & y1 | x2 & y2");
    CHECK(r.code == 0);
    CHECK(run({"classify"}, r.out).out == "PI 4\n");
    r = run({"phi-prime", "--shared-hats", "--notation", "math"}, "forall x1\nexists y1\nx1 ^ y1");
    CHECK(r.out == "(∀x1)(∃y1)[x1⊕y1]\n");
  }

  TEST_CASE("skolemize and verify-cert") {
    const auto cert = temp_path("cert.json");
    const std::string q = "forall x\nexists y\nx ^ y\n";
    auto r = run({"skolemize", "--cert-out", cert}, q);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("TRUE\n", 0) == 0);
    const auto parsed = nlohmann::json::parse(r.out.substr(5));
    CHECK(parsed[0]["table_bits"] == "10");
    CHECK(run({"verify-cert", "--cert", cert}, q).out == "VALID\n");
    {
      std::ofstream f(cert);
      f << R"([{"var": 2, "deps": [1], "table_bits": "01"}])";
    }
    r = run({"verify-cert", "--cert", cert}, q);
    CHECK(r.code == 1);
    CHECK(r.out == "INVALID\n");
    {
      std::ofstream f(cert);
      f << R"([{"var": 2, "deps": [], "table_bits": "1"}])";
    }
    CHECK(run({"verify-cert", "--cert", cert}, q).code == exit_code::kInput);
    {
      std::ofstream f(cert);
      f << "not json";
    }
    CHECK(run({"verify-cert", "--cert", cert}, q).code == exit_code::kInput);
    CHECK(run({"verify-cert"}, q).code == exit_code::kUsage);
  }

  TEST_CASE("bounded-skolem") {
    const std::string q = "forall x\nexists y\nx ^ y\n";
    CHECK(run({"bounded-skolem", "--bound", "1"}, q).out == "FALSE\n");
    CHECK(run({"bounded-skolem", "--bound", "2"}, q).out == "TRUE\n");
  }

  TEST_CASE("audit and replay") {
    auto r = run({"audit", "swap-criterion"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["details"]["entries"].size() == 16);
    CHECK(j["details"]["swap_unequal"] == 2);
    CHECK(j["verdict"] == "CONFIRMED");

    const auto report = temp_path("report.json");
    r = run({"audit", "phi-prime-equivalence", "--n", "2", "--family", "RANDOM_AST", "--seed", "5", "--count", "30",
             "--out", report});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream rf(report);
    const auto rj = nlohmann::json::parse(rf);
    CHECK(rj["seed"] == 5);
    CHECK(rj["instances_checked"] == 30);
    CHECK(rj["verdict"] != "CONFIRMED");
    CHECK(run({"replay", report}).code == 0);

    CHECK(run({"audit", "no-such-claim"}).code == exit_code::kUsage);
    CHECK(run({"audit", "phi-prime-equivalence", "--family", "bogus"}).code == exit_code::kInput);
    CHECK(run({"audit", "residual-count", "--n-max", "3"}).code == 0);
  }

  TEST_CASE("replay detects a tampered report") {
    nlohmann::json doc = {{"claim_id", "phi-prime-equivalence"},
                          {"params", nlohmann::json::object()},
                          {"seed", 0},
                          {"instances_checked", 1},
                          {"counterexamples",
                           {{{"serial", 3},
                             {"formula_text", "forall x1\nexists y1\nx1 ^ y1\n"},
                             {"lhs", true},
                             {"rhs", false}}}},
                          {"elapsed_ms", 0},
                          {"verdict", "REFUTED"}};
    const auto r = run({"replay"}, doc.dump());
    CHECK(r.code == 1);
    CHECK(r.out == "3 1 1 MISMATCH\n");
  }
}
