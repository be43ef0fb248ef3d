#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond the data types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qbflab/formula.hpp"
#include "qbflab/normalize.hpp"
#include "qbflab/qbf.hpp"

namespace oracle {

using qbflab::Formula;
using qbflab::NodeKind;
using qbflab::PrenexQbf;
using qbflab::Quantifier;
using qbflab::VarId;

using Bits = std::map<std::uint32_t, bool>;

inline bool eval(const Formula& f, const Bits& a) {
  switch (f.kind()) {
    case NodeKind::kConst:
      return f.constant_value();
    case NodeKind::kVar:
      return a.at(f.var().value);
    case NodeKind::kNot:
      return !eval(f.children()[0], a);
    case NodeKind::kAnd: {
      bool r = true;
      for (const auto& c : f.children()) r = r && eval(c, a);
      return r;
    }
    case NodeKind::kOr: {
      bool r = false;
      for (const auto& c : f.children()) r = r || eval(c, a);
      return r;
    }
    case NodeKind::kXor:
      return eval(f.children()[0], a) != eval(f.children()[1], a);
  }
  return false;
}

// Row r assigns order[i] the bit (k - 1 - i) of r.
inline Bits row_assignment(const std::vector<VarId>& order, std::uint64_t r) {
  Bits a;
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i) a[order[i].value] = (r >> (k - 1 - i)) & 1u;
  return a;
}

inline std::string table(const Formula& f, const std::vector<VarId>& order) {
  std::string out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << order.size()); ++r) {
    out += eval(f, row_assignment(order, r)) ? '1' : '0';
  }
  return out;
}

// Coefficient of monomial m is the XOR of f over all rows that are subsets of m.
inline std::set<std::uint64_t> anf_masks(const std::string& bits) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < bits.size(); ++m) {
    bool c = false;
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      c ^= bits[s] == '1';
      if (s == 0) break;
    }
    if (c) out.insert(m);
  }
  return out;
}

// Truth of a closed prenex formula by folding the full matrix table from the
// innermost quantifier outwards.
inline bool game_value(const PrenexQbf& q) {
  const auto order = q.prefix_vars();
  const std::string t = table(q.matrix(), order);
  std::vector<bool> layer(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) layer[r] = t[r] == '1';
  for (std::size_t i = order.size(); i-- > 0;) {
    const bool ex = q.prefix()[i].quantifier == Quantifier::kExists;
    std::vector<bool> next(layer.size() / 2);
    for (std::size_t r = 0; r < next.size(); ++r) {
      next[r] = ex ? (layer[2 * r] || layer[2 * r + 1]) : (layer[2 * r] && layer[2 * r + 1]);
    }
    layer = std::move(next);
  }
  return layer[0];
}

inline Formula random_formula(std::mt19937_64& rng, const std::vector<VarId>& vars, std::size_t depth) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (depth == 0 || pick(5) == 0) {
    if (vars.empty() || pick(10) == 0) return Formula::constant(pick(2));
    return Formula::variable(vars[pick(vars.size())]);
  }
  switch (pick(4)) {
    case 0:
      return Formula::negation(random_formula(rng, vars, depth - 1));
    case 1:
    case 2: {
      std::vector<Formula> kids;
      const std::size_t n = 2 + pick(2);
      for (std::size_t i = 0; i < n; ++i) kids.push_back(random_formula(rng, vars, depth - 1));
      return pick(2) ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
    }
    default:
      return Formula::exclusive_or(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
  }
}

// Truth of Phi' read with each clause as its own closed subformula under
// the outer assignment: (forall hats)(exists fresh)[body].
inline bool clause_value(const qbflab::PhiPrimeClause& c, Bits outer) {
  const auto& hats = c.hatted_universals;
  const auto& fresh = c.fresh_existentials;
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << hats.size()); ++h) {
    for (std::size_t i = 0; i < hats.size(); ++i) outer[hats[i].value] = (h >> i) & 1u;
    bool found = false;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << fresh.size()) && !found; ++f) {
      for (std::size_t i = 0; i < fresh.size(); ++i) outer[fresh[i].value] = (f >> i) & 1u;
      found = eval(c.body, outer);
    }
    if (!found) return false;
  }
  return true;
}

inline bool phi_prime_nested(const qbflab::PhiPrime& p) {
  const auto& xs = p.outer_universals;
  const auto& ys = p.outer_existentials;
  for (std::uint64_t xa = 0; xa < (std::uint64_t{1} << xs.size()); ++xa) {
    bool found = false;
    for (std::uint64_t ya = 0; ya < (std::uint64_t{1} << ys.size()) && !found; ++ya) {
      Bits outer;
      for (std::size_t i = 0; i < xs.size(); ++i) outer[xs[i].value] = (xa >> i) & 1u;
      for (std::size_t i = 0; i < ys.size(); ++i) outer[ys[i].value] = (ya >> i) & 1u;
      bool all = eval(p.base, outer);
      for (const auto& c : p.clauses) all = all && clause_value(c, outer);
      found = all;
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<VarId> ids(std::uint32_t from, std::uint32_t to) {
  std::vector<VarId> out;
  for (std::uint32_t v = from; v <= to; ++v) out.push_back(VarId{v});
  return out;
}

}  // namespace oracle
