#include <doctest.h>

#include "../oracles.hpp"
#include "qbflab/audit.hpp"
#include "qbflab/errors.hpp"
#include "qbflab/text_format.hpp"

using namespace qbflab;

namespace {

StandardFormQbf parity_standard(std::size_t n) {
  std::vector<QuantifiedVar> prefix;
  Formula m = Formula::constant(false);
  for (std::uint32_t i = 1; i <= 2 * n; ++i) {
    prefix.push_back({i % 2 ? Quantifier::kForall : Quantifier::kExists, VarId{i}});
    m = Formula::exclusive_or(m, Formula::variable(VarId{i}));
  }
  return StandardFormQbf::from_prenex(PrenexQbf(prefix, m));
}

}  // namespace

TEST_SUITE("audit") {
  TEST_CASE("two-variable functions follow the row encoding") {
    const VarId a{1}, b{2};
    for (unsigned fn = 0; fn < 16; ++fn) {
      std::string expected;
      for (unsigned r = 0; r < 4; ++r) expected += (fn >> r) & 1u ? '1' : '0';
      REQUIRE(oracle::table(two_variable_function(fn, a, b), {a, b}) == expected);
    }
  }

  TEST_CASE("swap criterion") {
    const auto reports = audit_swap_criterion();
    REQUIRE(reports.size() == 16);
    std::set<std::string> unequal;
    for (const auto& r : reports) {
      REQUIRE(r.swap_equal == (r.forall_exists == r.exists_forall));
      // oracle: forall x exists y against exists y forall x over the 4 rows
      auto bit = [&](int xv, int yv) { return r.table[static_cast<std::size_t>(xv * 2 + yv)] == '1'; };
      const bool fe = (bit(0, 0) || bit(0, 1)) && (bit(1, 0) || bit(1, 1));
      const bool ef = (bit(0, 0) && bit(1, 0)) || (bit(0, 1) && bit(1, 1));
      REQUIRE(r.forall_exists == fe);
      REQUIRE(r.exists_forall == ef);
      if (!r.swap_equal) unequal.insert(r.table);
    }
    CHECK(unequal == std::set<std::string>{"0110", "1001"});
    CHECK(reports[6].table == "0110");
    CHECK(reports[6].forall_exists);
    CHECK_FALSE(reports[6].exists_forall);
    CHECK(reports[8].table == "0001");
    CHECK_FALSE(reports[8].forall_exists);
    CHECK_FALSE(reports[8].exists_forall);
    CHECK(reports[15].forall_exists);
    CHECK(reports[15].exists_forall);
  }

  TEST_CASE("residual counts") {
    CHECK(expected_residual_count(1) == 1);
    CHECK(expected_residual_count(2) == 16);
    CHECK(expected_residual_count(3) == 144);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto s = parity_standard(n);
      std::set<std::pair<std::pair<std::size_t, std::size_t>, std::map<VarId, bool>>> distinct;
      const auto summary = enumerate_residuals(s, [&](const ResidualEnumeration& e) {
        REQUIRE(e.fixing.size() == 2 * n - 2);
        REQUIRE(e.residual.arity() == 2);
        // parity of the fixed bits decides XOR against XNOR
        bool odd = false;
        for (const auto& [v, bit] : e.fixing.values()) odd ^= bit;
        REQUIRE(e.residual.to_string() == (odd ? "1001" : "0110"));
        distinct.insert({e.selected_pair, e.fixing.values()});
      });
      CHECK(summary.enumerated == expected_residual_count(n));
      CHECK(distinct.size() == expected_residual_count(n));
      CHECK(summary.claimed == n * n);
      CHECK(summary.xor_like == summary.enumerated);
    }
  }

  TEST_CASE("ordered pairs option") {
    std::uint64_t count = 0;
    const auto summary = enumerate_residuals(parity_standard(3), [&](const ResidualEnumeration& e) {
      REQUIRE(e.selected_pair.first <= e.selected_pair.second);
      ++count;
    }, ResidualOptions{true});
    CHECK(count == 6 * 16);
    CHECK(summary.enumerated == count);
  }

  TEST_CASE("residual tables are the restricted matrix") {
    std::mt19937_64 rng(8);
    const auto vars = oracle::ids(1, 4);
    std::vector<QuantifiedVar> prefix;
    for (std::uint32_t i = 1; i <= 4; ++i) prefix.push_back({i % 2 ? Quantifier::kForall : Quantifier::kExists, VarId{i}});
    for (int t = 0; t < 30; ++t) {
      const auto s = StandardFormQbf::from_prenex(PrenexQbf(prefix, oracle::random_formula(rng, vars, 4)));
      enumerate_residuals(s, [&](const ResidualEnumeration& e) {
        const VarId xi{static_cast<std::uint32_t>(2 * e.selected_pair.first - 1)};
        const VarId yj{static_cast<std::uint32_t>(2 * e.selected_pair.second)};
        for (std::uint64_t r = 0; r < 4; ++r) {
          oracle::Bits a;
          for (const auto& [v, bit] : e.fixing.values()) a[v.value] = bit;
          a[xi.value] = (r >> 1) & 1u;
          a[yj.value] = r & 1u;
          REQUIRE(e.residual.get(r) == oracle::eval(s.qbf().matrix(), a));
        }
      });
    }
  }

  TEST_CASE("corpus families") {
    CorpusParams p;
    p.n = 2;
    p.pair = std::make_pair(std::size_t{0}, std::size_t{1});
    CHECK(collect_corpus(p).size() == 16);
    p.pair.reset();
    CHECK(collect_corpus(p).size() == 16 * 6);

    CorpusParams r;
    r.seed = 1;
    r.family = MatrixFamily::kRandomAst;
    r.count = 100;
    const auto first = collect_corpus(r);
    const auto second = collect_corpus(r);
    REQUIRE(first.size() == 100);
    for (std::size_t i = 0; i < first.size(); ++i) {
      REQUIRE(first[i].serial == second[i].serial);
      REQUIRE(first[i].qbf.qbf() == second[i].qbf.qbf());
      REQUIRE(first[i].qbf.qbf().is_closed());
      REQUIRE(first[i].qbf.n() == 2);
    }
    r.seed = 2;
    const auto other = collect_corpus(r);
    bool differs = false;
    for (std::size_t i = 0; i < other.size(); ++i) differs |= !(other[i].qbf.qbf() == first[i].qbf.qbf());
    CHECK(differs);

    CorpusParams c;
    c.n = 1;
    c.family = MatrixFamily::kAllSmallCnf;
    c.max_clauses = 2;
    // clauses over 2 variables that are not tautologies: 3^2 - 1 = 8
    CHECK(collect_corpus(c).size() == 8 + 28);

    CHECK(parse_family("random-ast") == MatrixFamily::kRandomAst);
    CHECK_THROWS_AS(parse_family("bogus"), CorpusError);
  }

  TEST_CASE("verdicts") {
    CHECK(conclude(ClaimScope::kExhaustive, false) == Verdict::kConfirmed);
    CHECK(conclude(ClaimScope::kExhaustive, true) == Verdict::kRefuted);
    CHECK(conclude(ClaimScope::kOpenUniversal, false) == Verdict::kNoCounterexampleFound);
    CHECK(conclude(ClaimScope::kOpenUniversal, true) == Verdict::kRefuted);
  }

  TEST_CASE("n = 1 calibration and report round trip") {
    for (auto fam : {MatrixFamily::kExhaustive2Var, MatrixFamily::kRandomAst, MatrixFamily::kAllSmallCnf}) {
      CorpusParams p;
      p.n = 1;
      p.family = fam;
      p.count = 50;
      const auto report = audit_phi_prime_equivalence(p);
      CHECK(report.counterexamples.empty());
      CHECK(report.verdict == Verdict::kNoCounterexampleFound);
      CHECK(report.instances_checked > 0);
    }
    CorpusParams p;
    p.n = 2;
    const auto report = audit_phi_prime_equivalence(p);
    CHECK(report.instances_checked == 96);
    CHECK(report.verdict != Verdict::kConfirmed);
    const auto back = report_from_json(report.to_json());
    CHECK(back.claim_id == "phi-prime-equivalence");
    CHECK(back.instances_checked == report.instances_checked);
    CHECK(back.verdict == report.verdict);
    CHECK(back.counterexamples.size() == report.counterexamples.size());
    const auto j = report.to_json();
    for (const char* key : {"claim_id", "params", "seed", "instances_checked", "counterexamples", "elapsed_ms", "verdict"}) {
      CHECK(j.contains(key));
    }
  }

  TEST_CASE("replay reproduces per-side bits") {
    const auto q = parse_qbf_text("forall x1\nexists y1\nforall x2\nexists y2\nx2 ^ y1");
    const auto [lhs, rhs] = replay_phi_prime_instance(print_qbf(q));
    CHECK(lhs == evaluate_qbf(q));
    const auto p = prenex_phi_prime(build_phi_prime(StandardFormQbf::from_prenex(q)));
    CHECK(rhs == evaluate_qbf(p));
  }

  TEST_CASE("blowup rows") {
    const auto rows = measure_skolem_blowup(10);
    REQUIRE(rows.size() == 10);
    for (std::size_t k = 1; k <= 10; ++k) {
      CHECK(rows[k - 1].k == k);
      CHECK(rows[k - 1].table_bits == (std::uint64_t{1} << k));
      CHECK(rows[k - 1].anf_size == k);
    }
    CHECK(rows[3].searched);
    CHECK_THROWS_AS(measure_skolem_blowup(25), ArityOverflowError);
  }

  TEST_CASE("exhaustive reports") {
    CHECK(swap_criterion_report().verdict == Verdict::kConfirmed);
    CHECK(residual_count_report(3).verdict == Verdict::kConfirmed);
    CHECK(standard_form_report(3).verdict == Verdict::kConfirmed);
    CHECK(standard_form_report(3).details.at("worked_example") == "(∀α)(∃x)(∀β)(∃y)(∀z)(∃γ)[x∨y∨z]");
  }
}
