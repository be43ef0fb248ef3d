#include "qbflab/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "qbflab/errors.hpp"

namespace qbflab {
namespace {

// Pattern of row-index bit p (p < 6) within one 64-row word.
constexpr std::uint64_t kLowBitPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::size_t word_count(std::size_t arity) { return arity <= 6 ? 1 : std::size_t{1} << (arity - 6); }

std::uint64_t tail_mask(std::size_t arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

// 64 rows at a time: each variable becomes a word of its values.
class SlicedProgram {
 public:
  SlicedProgram(const Formula& f, const std::vector<VarId>& order) {
    for (std::uint32_t i = 0; i < order.size(); ++i) slot_of_.emplace(order[i], i);
    emit(f);
  }

  std::uint64_t eval(const std::vector<std::uint64_t>& var_words) const {
    std::size_t pos = 0;
    return eval_at(pos, var_words);
  }

 private:
  struct Op {
    NodeKind kind;
    std::uint32_t arg;
  };

  void emit(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::kConst:
        ops_.push_back({NodeKind::kConst, f.constant_value() ? 1u : 0u});
        return;
      case NodeKind::kVar: {
        auto it = slot_of_.find(f.var());
        if (it == slot_of_.end()) throw OpenFormulaError(f.var().value);
        ops_.push_back({NodeKind::kVar, it->second});
        return;
      }
      default:
        ops_.push_back({f.kind(), static_cast<std::uint32_t>(f.children().size())});
        for (const auto& c : f.children()) emit(c);
    }
  }

  std::uint64_t eval_at(std::size_t& pos, const std::vector<std::uint64_t>& vw) const {
    const Op op = ops_[pos++];
    switch (op.kind) {
      case NodeKind::kConst:
        return op.arg ? ~std::uint64_t{0} : 0;
      case NodeKind::kVar:
        return vw[op.arg];
      case NodeKind::kNot:
        return ~eval_at(pos, vw);
      case NodeKind::kXor: {
        const auto a = eval_at(pos, vw);
        return a ^ eval_at(pos, vw);
      }
      case NodeKind::kAnd: {
        std::uint64_t acc = ~std::uint64_t{0};
        for (std::uint32_t i = 0; i < op.arg; ++i) acc &= eval_at(pos, vw);
        return acc;
      }
      case NodeKind::kOr: {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < op.arg; ++i) acc |= eval_at(pos, vw);
        return acc;
      }
    }
    return 0;
  }

  std::map<VarId, std::uint32_t> slot_of_;
  std::vector<Op> ops_;
};

}  // namespace

TruthTable::TruthTable(std::vector<VarId> var_order, TableLimits limits) : var_order_(std::move(var_order)) {
  if (var_order_.size() > limits.max_arity || var_order_.size() > 40) {
    throw ArityOverflowError(var_order_.size(), std::min<std::size_t>(limits.max_arity, 40));
  }
  std::set<VarId> seen(var_order_.begin(), var_order_.end());
  if (seen.size() != var_order_.size()) throw std::invalid_argument("duplicate variable in table order");
  words_.assign(word_count(arity()), 0);
}

TruthTable TruthTable::from_word(std::vector<VarId> var_order, std::uint64_t packed) {
  TruthTable t(std::move(var_order));
  if (t.arity() > 6) throw std::invalid_argument("from_word needs arity <= 6");
  t.words_[0] = packed & tail_mask(t.arity());
  return t;
}

TruthTable TruthTable::from_string(std::vector<VarId> var_order, std::string_view rows) {
  TruthTable t(std::move(var_order));
  if (rows.size() != t.rows()) throw std::invalid_argument("row string length must be 2^arity");
  for (std::uint64_t r = 0; r < rows.size(); ++r) {
    if (rows[r] != '0' && rows[r] != '1') throw std::invalid_argument("row string must contain only 0 and 1");
    t.set(r, rows[r] == '1');
  }
  return t;
}

void TruthTable::set(std::uint64_t row, bool bit) {
  const std::uint64_t m = std::uint64_t{1} << (row & 63);
  if (bit) {
    words_[row >> 6] |= m;
  } else {
    words_[row >> 6] &= ~m;
  }
}

std::uint64_t TruthTable::row_of(const Assignment& a) const {
  std::uint64_t row = 0;
  for (const auto& v : var_order_) row = (row << 1) | (a.get(v) ? 1u : 0u);
  return row;
}

std::string TruthTable::to_string() const {
  std::string s(rows(), '0');
  for (std::uint64_t r = 0; r < rows(); ++r) {
    if (get(r)) s[r] = '1';
  }
  return s;
}

bool TruthTable::all_ones() const {
  const std::uint64_t tail = tail_mask(arity());
  return std::all_of(words_.begin(), words_.end(), [tail](std::uint64_t w) { return w == tail; });
}

bool TruthTable::all_zeros() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

TruthTable formula_to_truth_table(const Formula& f, const std::vector<VarId>& var_order, TableLimits limits) {
  TruthTable table(var_order, limits);
  const std::size_t k = var_order.size();
  SlicedProgram program(f, var_order);
  std::vector<std::uint64_t> var_words(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t p = k - 1 - i;
    if (p < 6) var_words[i] = kLowBitPattern[p];
  }
  auto& words = table.mutable_words();
  const std::uint64_t tail = tail_mask(k);
  for (std::size_t block = 0; block < words.size(); ++block) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t p = k - 1 - i;
      if (p >= 6) var_words[i] = ((block >> (p - 6)) & 1u) ? ~std::uint64_t{0} : 0;
    }
    words[block] = program.eval(var_words) & tail;
  }
  return table;
}

void moebius_transform(std::vector<std::uint64_t>& words, std::size_t arity) {
  for (std::size_t p = 0; p < arity; ++p) {
    if (p < 6) {
      const std::uint64_t upper = kLowBitPattern[p];
      const unsigned shift = 1u << p;
      for (auto& w : words) w ^= (w << shift) & upper;
    } else {
      const std::size_t stride = std::size_t{1} << (p - 6);
      for (std::size_t b = 0; b < words.size(); ++b) {
        if (b & stride) words[b] ^= words[b ^ stride];
      }
    }
  }
}

AnfPolynomial::AnfPolynomial(std::vector<VarId> var_order, std::vector<std::uint64_t> monomials)
    : var_order_(std::move(var_order)), monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end(), [](std::uint64_t a, std::uint64_t b) {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    return da != db ? da < db : a > b;
  });
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
    throw std::invalid_argument("duplicate monomial");
  }
  const std::uint64_t full = var_order_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << var_order_.size()) - 1;
  for (auto m : monomials_) {
    if (m & ~full) throw std::invalid_argument("monomial mentions a variable outside var_order");
  }
}

std::vector<VarId> AnfPolynomial::monomial_vars(std::size_t index) const {
  const std::uint64_t m = monomials_.at(index);
  const std::size_t k = var_order_.size();
  std::vector<VarId> out;
  for (std::size_t i = 0; i < k; ++i) {
    if ((m >> (k - 1 - i)) & 1u) out.push_back(var_order_[i]);
  }
  return out;
}

bool AnfPolynomial::evaluate_row(std::uint64_t row) const {
  bool acc = false;
  for (auto m : monomials_) acc ^= (m & row) == m;
  return acc;
}

bool AnfPolynomial::evaluate(const Assignment& a) const {
  std::uint64_t row = 0;
  for (const auto& v : var_order_) row = (row << 1) | (a.get(v) ? 1u : 0u);
  return evaluate_row(row);
}

Formula AnfPolynomial::to_formula() const {
  if (monomials_.empty()) return Formula::constant(false);
  std::vector<Formula> terms;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    const auto vars = monomial_vars(i);
    if (vars.empty()) {
      terms.push_back(Formula::constant(true));
      continue;
    }
    std::vector<Formula> factors;
    for (auto v : vars) factors.push_back(Formula::variable(v));
    terms.push_back(Formula::conjunction(std::move(factors)));
  }
  Formula acc = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) acc = Formula::exclusive_or(terms[i], acc);
  return acc;
}

AnfPolynomial truth_table_to_anf(const TruthTable& t) {
  auto coeffs = t.words();
  moebius_transform(coeffs, t.arity());
  std::vector<std::uint64_t> monomials;
  for (std::uint64_t r = 0; r < t.rows(); ++r) {
    if ((coeffs[r >> 6] >> (r & 63)) & 1u) monomials.push_back(r);
  }
  return AnfPolynomial(t.var_order(), std::move(monomials));
}

}  // namespace qbflab
