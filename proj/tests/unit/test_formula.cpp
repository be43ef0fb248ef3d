#include <doctest.h>

#include "../oracles.hpp"
#include "qbflab/errors.hpp"
#include "qbflab/truth_table.hpp"

using namespace qbflab;

namespace {

const VarId x{1}, y{2}, z{3};
Formula X() { return Formula::variable(x); }
Formula Y() { return Formula::variable(y); }

std::set<std::uint64_t> masks(const AnfPolynomial& p) { return {p.monomials().begin(), p.monomials().end()}; }

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("builders collapse and reject") {
    CHECK(Formula::conjunction({X()}) == X());
    CHECK(Formula::disjunction({Y()}) == Y());
    CHECK_THROWS_AS(Formula::conjunction({}), std::invalid_argument);
    CHECK_THROWS_AS(Formula::variable(VarId{0}), std::invalid_argument);
    CHECK(Formula::disjunction({X(), Y()}).children().size() == 2);
  }

  TEST_CASE("evaluation and missing variables") {
    const auto f = Formula::exclusive_or(X(), Formula::negation(Y()));
    CHECK(eval_formula(f, {{x, true}, {y, true}}));
    CHECK_FALSE(eval_formula(f, {{x, false}, {y, true}}) == true);
    CHECK_THROWS_AS(eval_formula(f, {{x, true}}), MissingVariableError);
    CHECK(node_count(f) == 4);
    CHECK(variables(f) == std::set<VarId>{x, y});
  }

  TEST_CASE("substitute_vars does not rewrite images") {
    const auto f = Formula::conjunction({X(), Y()});
    const auto g = substitute_vars(f, {{x, Y()}, {y, Formula::constant(true)}});
    CHECK(g == Formula::conjunction({Y(), Formula::constant(true)}));
  }

  TEST_CASE("truth table examples") {
    CHECK(formula_to_truth_table(Formula::disjunction({X(), Y()}), {x, y}).to_string() == "0111");
    CHECK(formula_to_truth_table(Formula::exclusive_or(X(), Y()), {x, y}).to_string() == "0110");
    CHECK(formula_to_truth_table(Formula::constant(true), {}).to_string() == "1");
    // var_order[0] is the high bit
    CHECK(formula_to_truth_table(Formula::conjunction({X(), Formula::negation(Y())}), {x, y}).to_string() == "0010");
    CHECK(formula_to_truth_table(Formula::conjunction({X(), Formula::negation(Y())}), {y, x}).to_string() == "0100");
  }

  TEST_CASE("truth table limits") {
    std::vector<VarId> order = oracle::ids(1, 25);
    CHECK_THROWS_AS(formula_to_truth_table(X(), order), ArityOverflowError);
    CHECK_THROWS_AS(formula_to_truth_table(X(), {x, y}, TableLimits{1}), ArityOverflowError);
    CHECK_THROWS_AS(formula_to_truth_table(Formula::variable(z), {x, y}), OpenFormulaError);
    CHECK_THROWS_AS(TruthTable({x, x}), std::invalid_argument);
  }

  TEST_CASE("ANF examples") {
    const auto or_anf = truth_table_to_anf(formula_to_truth_table(Formula::disjunction({X(), Y()}), {x, y}));
    CHECK(masks(or_anf) == std::set<std::uint64_t>{0b01, 0b10, 0b11});
    CHECK(anf_size(or_anf) == 3);
    const auto xor_anf = truth_table_to_anf(formula_to_truth_table(Formula::exclusive_or(X(), Y()), {x, y}));
    CHECK(masks(xor_anf) == std::set<std::uint64_t>{0b01, 0b10});
    CHECK(anf_size(truth_table_to_anf(TruthTable({x, y}))) == 0);
    const auto not_anf = truth_table_to_anf(TruthTable::from_string({x}, "10"));
    CHECK(masks(not_anf) == std::set<std::uint64_t>{0, 1});
    CHECK(anf_size(not_anf) == 2);
    // graded order: constant first, then degree 1 in var_order, then xy
    CHECK(or_anf.monomials() == std::vector<std::uint64_t>{0b10, 0b01, 0b11});
    CHECK(or_anf.monomial_vars(2) == std::vector<VarId>{x, y});
  }

  TEST_CASE("ANF round trip is exhaustive for k <= 3") {
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto order = oracle::ids(1, static_cast<std::uint32_t>(k));
      const std::uint64_t rows = std::uint64_t{1} << k;
      for (std::uint64_t fn = 0; fn < (std::uint64_t{1} << rows); ++fn) {
        const auto t = TruthTable::from_word(order, fn);
        const auto p = truth_table_to_anf(t);
        CHECK(masks(p) == oracle::anf_masks(t.to_string()));
        for (std::uint64_t r = 0; r < rows; ++r) REQUIRE(p.evaluate_row(r) == t.get(r));
        REQUIRE(formula_to_truth_table(p.to_formula(), order) == t);
      }
    }
  }

  TEST_CASE("ANF round trip on sampled k = 4 and wide tables") {
    std::mt19937_64 rng(4);
    const auto order = oracle::ids(1, 4);
    for (int i = 0; i < 2000; ++i) {
      const auto t = TruthTable::from_word(order, rng() & 0xffff);
      const auto p = truth_table_to_anf(t);
      REQUIRE(masks(p) == oracle::anf_masks(t.to_string()));
      REQUIRE(formula_to_truth_table(p.to_formula(), order) == t);
    }
    // multi-word tables exercise the cross-word butterfly stages
    const auto wide = oracle::ids(1, 9);
    for (int i = 0; i < 20; ++i) {
      std::string bits;
      for (int r = 0; r < 512; ++r) bits += (rng() & 1) ? '1' : '0';
      const auto t = TruthTable::from_string(wide, bits);
      const auto p = truth_table_to_anf(t);
      REQUIRE(masks(p) == oracle::anf_masks(bits));
      auto words = t.words();
      moebius_transform(words, 9);
      moebius_transform(words, 9);
      REQUIRE(words == t.words());
    }
  }

  TEST_CASE("unused variables only duplicate rows") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const auto f = oracle::random_formula(rng, {x, y}, 4);
      const auto small = formula_to_truth_table(f, {x, y});
      for (std::size_t pos = 0; pos <= 2; ++pos) {
        std::vector<VarId> big{x, y};
        big.insert(big.begin() + static_cast<long>(pos), z);
        const auto t = formula_to_truth_table(f, big);
        std::string restricted;
        for (std::uint64_t r = 0; r < 8; ++r) {
          if (((r >> (2 - pos)) & 1u) == 0) restricted += t.get(r) ? '1' : '0';
        }
        REQUIRE(restricted == small.to_string());
      }
    }
  }

  TEST_CASE("eval_formula, compiled formula and table agree with the oracle") {
    std::mt19937_64 rng(3);
    const auto order = oracle::ids(1, 3);
    for (int i = 0; i < 1000; ++i) {
      const auto f = oracle::random_formula(rng, order, 5);
      const auto t = formula_to_truth_table(f, order);
      REQUIRE(t.to_string() == oracle::table(f, order));
      const CompiledFormula c(f, order);
      for (std::uint64_t r = 0; r < 8; ++r) {
        Assignment a;
        std::uint64_t slots = 0;
        for (std::size_t v = 0; v < 3; ++v) {
          const bool bit = (r >> (2 - v)) & 1u;
          a.set(order[v], bit);
          slots |= std::uint64_t{bit} << v;
        }
        REQUIRE(eval_formula(f, a) == t.get(r));
        REQUIRE(t.row_of(a) == r);
        REQUIRE(c.eval(slots) == t.get(r));
      }
    }
  }
}
