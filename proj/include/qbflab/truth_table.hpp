#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbflab/formula.hpp"

namespace qbflab {

inline constexpr std::size_t kDefaultArityCap = 24;

struct TableLimits {
  std::size_t max_arity = kDefaultArityCap;
};

// k-ary boolean function as 2^k bits. Row r encodes the assignment whose
// var_order[0] value is the most significant bit of r.
class TruthTable {
 public:
  TruthTable() : TruthTable(std::vector<VarId>{}) {}
  // All-zero table over the given variables.
  explicit TruthTable(std::vector<VarId> var_order, TableLimits limits = {});
  // Row r takes bit r of `packed`; requires 2^k <= 64.
  static TruthTable from_word(std::vector<VarId> var_order, std::uint64_t packed);
  // Character r of `rows` ('0' or '1') is row r.
  static TruthTable from_string(std::vector<VarId> var_order, std::string_view rows);

  std::size_t arity() const noexcept { return var_order_.size(); }
  std::uint64_t rows() const noexcept { return std::uint64_t{1} << arity(); }
  const std::vector<VarId>& var_order() const noexcept { return var_order_; }

  bool get(std::uint64_t row) const { return (words_[row >> 6] >> (row & 63)) & 1u; }
  void set(std::uint64_t row, bool bit);

  // Packed rows, row r at bit r % 64 of word r / 64. Bits past rows() are zero.
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& mutable_words() noexcept { return words_; }

  std::uint64_t row_of(const Assignment& a) const;
  std::string to_string() const;
  bool all_ones() const;
  bool all_zeros() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<VarId> var_order_;
  std::vector<std::uint64_t> words_;
};

// Throws ArityOverflowError beyond limits.max_arity and OpenFormulaError when f
// mentions a variable missing from var_order.
TruthTable formula_to_truth_table(const Formula& f, const std::vector<VarId>& var_order, TableLimits limits = {});

// XOR of AND-monomials. A monomial is a mask over row-index bits, so bit
// (k - 1 - i) selects var_order[i]; mask 0 is the constant-1 monomial.
class AnfPolynomial {
 public:
  AnfPolynomial() = default;
  AnfPolynomial(std::vector<VarId> var_order, std::vector<std::uint64_t> monomials);

  const std::vector<VarId>& var_order() const noexcept { return var_order_; }
  // Graded order: by degree, then following var_order. No duplicates.
  const std::vector<std::uint64_t>& monomials() const noexcept { return monomials_; }
  std::vector<VarId> monomial_vars(std::size_t index) const;

  bool evaluate_row(std::uint64_t row) const;
  bool evaluate(const Assignment& a) const;
  // Right-nested Xor chain of monomials, Const(0) for the zero polynomial.
  Formula to_formula() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  std::vector<VarId> var_order_;
  std::vector<std::uint64_t> monomials_;
};

AnfPolynomial truth_table_to_anf(const TruthTable& t);

// Monomial count; the size metric for bounded Skolem functions.
inline std::size_t anf_size(const AnfPolynomial& p) { return p.monomials().size(); }

// In-place Moebius transform of 2^k packed bits (table <-> ANF coefficients;
// the transform is an involution).
void moebius_transform(std::vector<std::uint64_t>& words, std::size_t arity);

}  // namespace qbflab
