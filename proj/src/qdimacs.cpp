#include "qbflab/qdimacs.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qbflab/errors.hpp"

namespace qbflab {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view word, std::size_t line) {
  long long value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, 1, "expected an integer, found '" + std::string(word) + "'");
  }
  return value;
}

Formula literal(long long lit) {
  Formula v = Formula::variable(VarId{static_cast<std::uint32_t>(lit < 0 ? -lit : lit)});
  return lit < 0 ? Formula::negation(std::move(v)) : v;
}

// Literal form of a CNF leaf, or nullopt.
std::optional<long long> as_literal(const Formula& f) {
  if (f.kind() == NodeKind::kVar) return static_cast<long long>(f.var().value);
  if (f.kind() == NodeKind::kNot && f.children()[0].kind() == NodeKind::kVar) {
    return -static_cast<long long>(f.children()[0].var().value);
  }
  return std::nullopt;
}

std::optional<std::vector<long long>> as_clause(const Formula& f) {
  if (f.kind() == NodeKind::kConst && !f.constant_value()) return std::vector<long long>{};
  if (auto lit = as_literal(f)) return std::vector<long long>{*lit};
  if (f.kind() != NodeKind::kOr) return std::nullopt;
  std::vector<long long> out;
  for (const auto& c : f.children()) {
    auto lit = as_literal(c);
    if (!lit) return std::nullopt;
    out.push_back(*lit);
  }
  return out;
}

}  // namespace

PrenexQbf parse_qdimacs(std::string_view input) {
  bool have_header = false;
  long long nvars = 0;
  long long nclauses = 0;
  std::vector<QuantifiedVar> prefix;
  std::set<std::uint32_t> quantified;
  std::vector<std::vector<long long>> clauses;
  std::vector<long long> pending;
  std::size_t pending_line = 0;
  bool in_clauses = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t nl = input.find('\n', pos);
    if (nl == std::string_view::npos) nl = input.size();
    const std::string_view line = input.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;

    if (!have_header) {
      if (words[0] != "p") throw ParseError(line_no, 1, "malformed document: missing problem line", {"'p cnf'"});
      if (words.size() != 4 || words[1] != "cnf") {
        throw ParseError(line_no, 1, "malformed header", {"'p cnf <nvars> <nclauses>'"});
      }
      nvars = to_int(words[2], line_no);
      nclauses = to_int(words[3], line_no);
      if (nvars < 0 || nclauses < 0 || nvars > (1ll << 30)) throw ParseError(line_no, 1, "malformed header counts");
      have_header = true;
      continue;
    }

    if (words[0] == "a" || words[0] == "e") {
      if (in_clauses) throw ParseError(line_no, 1, "quantifier line after the first clause");
      if (words.back() != "0") throw ParseError(line_no, line.size() + 1, "missing terminating 0", {"'0'"});
      const Quantifier q = words[0] == "a" ? Quantifier::kForall : Quantifier::kExists;
      for (std::size_t i = 1; i + 1 < words.size(); ++i) {
        const long long v = to_int(words[i], line_no);
        if (v < 1 || v > nvars) throw ParseError(line_no, 1, "variable " + std::to_string(v) + " out of range");
        if (!quantified.insert(static_cast<std::uint32_t>(v)).second) {
          throw ParseError(line_no, 1, "variable " + std::to_string(v) + " is quantified twice");
        }
        prefix.push_back({q, VarId{static_cast<std::uint32_t>(v)}});
      }
      if (words.size() == 2) throw ParseError(line_no, 1, "empty quantifier block");
      continue;
    }

    in_clauses = true;
    for (auto w : words) {
      const long long lit = to_int(w, line_no);
      if (lit == 0) {
        clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (lit < -nvars || lit > nvars) {
        throw ParseError(line_no, 1, "literal " + std::to_string(lit) + " out of range");
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(lit);
    }
  }

  if (!have_header) throw ParseError(line_no, 1, "malformed document: missing problem line", {"'p cnf'"});
  if (!pending.empty()) throw ParseError(pending_line, 1, "missing terminating 0 after clause", {"'0'"});
  if (static_cast<long long>(clauses.size()) != nclauses) {
    throw ParseError(line_no, 1,
                     "malformed document: header declares " + std::to_string(nclauses) + " clauses, found " +
                         std::to_string(clauses.size()));
  }

  std::set<std::uint32_t> free_vars;
  for (const auto& c : clauses) {
    for (auto lit : c) {
      const auto v = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
      if (!quantified.contains(v)) free_vars.insert(v);
    }
  }
  std::vector<QuantifiedVar> full_prefix;
  for (auto v : free_vars) full_prefix.push_back({Quantifier::kExists, VarId{v}});
  full_prefix.insert(full_prefix.end(), prefix.begin(), prefix.end());

  std::map<VarId, std::string> names;
  for (const auto& qv : full_prefix) names.emplace(qv.var, "x" + std::to_string(qv.var.value));

  std::vector<Formula> conjuncts;
  for (const auto& c : clauses) {
    if (c.empty()) {
      conjuncts.push_back(Formula::constant(false));
      continue;
    }
    std::vector<Formula> lits;
    for (auto lit : c) lits.push_back(literal(lit));
    conjuncts.push_back(Formula::disjunction(std::move(lits)));
  }
  Formula matrix = conjuncts.empty() ? Formula::constant(true) : Formula::conjunction(std::move(conjuncts));
  return PrenexQbf(std::move(full_prefix), std::move(matrix), std::move(names));
}

std::string print_qdimacs(const PrenexQbf& q) {
  std::vector<std::vector<long long>> clauses;
  const Formula& m = q.matrix();
  if (m.kind() == NodeKind::kConst && m.constant_value()) {
    // no clauses
  } else if (auto single = as_clause(m)) {
    clauses.push_back(*single);
  } else if (m.kind() == NodeKind::kAnd) {
    for (const auto& c : m.children()) {
      auto clause = as_clause(c);
      if (!clause) throw QbfError("matrix is not in conjunctive normal form");
      clauses.push_back(*clause);
    }
  } else {
    throw QbfError("matrix is not in conjunctive normal form");
  }

  std::ostringstream out;
  out << "p cnf " << q.max_var().value << ' ' << clauses.size() << '\n';
  const auto& prefix = q.prefix();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i == 0 || prefix[i].quantifier != prefix[i - 1].quantifier) {
      if (i) out << "0\n";
      out << (prefix[i].quantifier == Quantifier::kForall ? 'a' : 'e') << ' ';
    }
    out << prefix[i].var.value << ' ';
  }
  if (!prefix.empty()) out << "0\n";
  for (const auto& c : clauses) {
    for (auto lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace qbflab
