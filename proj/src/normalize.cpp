#include "qbflab/normalize.hpp"

#include <set>

#include "qbflab/errors.hpp"

namespace qbflab {
namespace {

class NamePool {
 public:
  explicit NamePool(const PrenexQbf& q) {
    for (const auto& qv : q.prefix()) used_.insert(q.name_of(qv.var));
    for (auto v : variables(q.matrix())) used_.insert(q.name_of(v));
  }

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (std::size_t i = 2; used_.contains(name); ++i) name = base + std::to_string(i);
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

Quantifier flip(Quantifier q) { return q == Quantifier::kForall ? Quantifier::kExists : Quantifier::kForall; }

}  // namespace

StandardFormQbf StandardFormQbf::from_prenex(PrenexQbf q) {
  const auto& prefix = q.prefix();
  if (prefix.empty() || prefix.size() % 2 != 0) throw PrefixError("standard form needs a nonempty even-length prefix");
  std::vector<std::pair<VarId, VarId>> pairing;
  for (std::size_t i = 0; i < prefix.size(); i += 2) {
    if (prefix[i].quantifier != Quantifier::kForall || prefix[i + 1].quantifier != Quantifier::kExists) {
      throw PrefixError("standard form prefix must alternate forall/exists starting with forall");
    }
    pairing.emplace_back(prefix[i].var, prefix[i + 1].var);
  }
  return StandardFormQbf(std::move(q), std::move(pairing));
}

StandardFormResult to_standard_form(const PrenexQbf& q) {
  q.require_closed();
  NamePool pool(q);
  auto names = q.names();
  std::uint32_t next_id = q.max_var().value + 1;
  std::vector<QuantifiedVar> out;
  std::vector<VariableMapEntry> mapping;

  auto add_dummy = [&](Quantifier quant, const std::string& base) {
    const VarId id{next_id++};
    names[id] = pool.fresh(base);
    mapping.push_back({id, names[id], quant, out.size(), std::nullopt, true});
    out.push_back({quant, id});
  };

  Quantifier expected = Quantifier::kForall;
  for (std::size_t pos = 0; pos < q.prefix().size(); ++pos) {
    const auto& qv = q.prefix()[pos];
    if (qv.quantifier != expected) {
      add_dummy(expected, out.empty() ? "α" : "β");
      expected = flip(expected);
    }
    mapping.push_back({qv.var, q.name_of(qv.var), qv.quantifier, out.size(), pos, false});
    out.push_back(qv);
    expected = flip(expected);
  }
  if (out.empty()) add_dummy(Quantifier::kForall, "α");
  if (out.size() % 2 != 0) add_dummy(Quantifier::kExists, "γ");

  return {StandardFormQbf::from_prenex(PrenexQbf(std::move(out), q.matrix(), std::move(names))), std::move(mapping)};
}

PhiPrime build_phi_prime(const StandardFormQbf& s) {
  const PrenexQbf& q = s.qbf();
  const std::size_t n = s.n();
  NamePool pool(q);
  PhiPrime p{{}, {}, q.matrix(), {}, q.names()};
  for (const auto& [x, y] : s.pairing()) {
    p.outer_universals.push_back(x);
    p.outer_existentials.push_back(y);
  }
  std::uint32_t next_id = q.max_var().value + 1;
  for (std::size_t j = n; j >= 2; --j) {
    PhiPrimeClause clause{j, {}, {}, q.matrix()};
    std::map<VarId, Formula> images;
    for (std::size_t i = j; i <= n; ++i) {
      const auto [x, y] = s.pairing()[i - 1];
      const VarId xh{next_id++};
      const VarId z{next_id++};
      p.names[xh] = pool.fresh(q.name_of(x) + "_h" + std::to_string(j));
      p.names[z] = pool.fresh(q.name_of(y) + "_z" + std::to_string(j));
      clause.hatted_universals.push_back(xh);
      clause.fresh_existentials.push_back(z);
      images.emplace(x, Formula::variable(xh));
      images.emplace(y, Formula::variable(z));
    }
    clause.body = substitute_vars(q.matrix(), images);
    p.clauses.push_back(std::move(clause));
  }
  return p;
}

PrenexQbf prenex_phi_prime(const PhiPrime& p, HatSharing sharing) {
  std::vector<QuantifiedVar> prefix;
  for (auto x : p.outer_universals) prefix.push_back({Quantifier::kForall, x});
  for (auto y : p.outer_existentials) prefix.push_back({Quantifier::kExists, y});

  std::vector<Formula> conjuncts{p.base};
  std::vector<VarId> hats;
  std::vector<VarId> fresh;
  if (sharing == HatSharing::kRenamedApart) {
    for (const auto& c : p.clauses) {
      hats.insert(hats.end(), c.hatted_universals.begin(), c.hatted_universals.end());
      fresh.insert(fresh.end(), c.fresh_existentials.begin(), c.fresh_existentials.end());
      conjuncts.push_back(c.body);
    }
  } else if (!p.clauses.empty()) {
    // The last clause (start 2) owns a variable for every pair 2..n; the
    // other clauses are rewritten onto it.
    const auto& widest = p.clauses.back();
    hats = widest.hatted_universals;
    fresh = widest.fresh_existentials;
    const std::size_t n = p.outer_universals.size();
    for (const auto& c : p.clauses) {
      std::map<VarId, Formula> images;
      for (std::size_t i = c.start; i <= n; ++i) {
        images.emplace(c.hatted_universals[i - c.start], Formula::variable(widest.hatted_universals[i - 2]));
        images.emplace(c.fresh_existentials[i - c.start], Formula::variable(widest.fresh_existentials[i - 2]));
      }
      conjuncts.push_back(substitute_vars(c.body, images));
    }
  }
  for (auto v : hats) prefix.push_back({Quantifier::kForall, v});
  for (auto v : fresh) prefix.push_back({Quantifier::kExists, v});

  std::map<VarId, std::string> names;
  for (const auto& qv : prefix) {
    if (auto it = p.names.find(qv.var); it != p.names.end()) names.emplace(qv.var, it->second);
  }
  return PrenexQbf(std::move(prefix), Formula::conjunction(std::move(conjuncts)), std::move(names));
}

}  // namespace qbflab
