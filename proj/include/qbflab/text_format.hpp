#pragma once

#include <string>
#include <string_view>

#include "qbflab/errors.hpp"
#include "qbflab/qbf.hpp"

namespace qbflab {

class UnboundVariableError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateQuantificationError : public ParseError {
 public:
  using ParseError::ParseError;
};

inline constexpr std::size_t kMaxNestingDepth = 1000;

// Quantifier lines ("forall x1 x2" / "exists y1") followed by one infix
// matrix over ! & ^ | (tightest first) and parentheses. Variables receive ids
// 1, 2, ... in quantification order. See docs/formats.md for the grammar.
PrenexQbf parse_qbf_text(std::string_view input);

// Inverse of parse_qbf_text up to variable ids: parsing the output yields a
// formula alpha-equivalent to q with the same names.
std::string print_qbf(const PrenexQbf& q);

// Matrix only, in the same infix syntax.
std::string print_formula(const Formula& f, const PrenexQbf& names_from);

// Mathematical notation, e.g. (∀α)(∃x)[x∨y].
std::string print_qbf_math(const PrenexQbf& q);

// Same quantifier sequence and matrix after renaming prefix variables by
// position.
bool alpha_equivalent(const PrenexQbf& a, const PrenexQbf& b);

}  // namespace qbflab
