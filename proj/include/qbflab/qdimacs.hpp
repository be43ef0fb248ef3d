#pragma once

#include <string>
#include <string_view>

#include "qbflab/qbf.hpp"

namespace qbflab {

// QDIMACS prenex CNF. Quantifier blocks expand to one prefix entry per
// variable in file order; variables that occur in clauses without being
// quantified are bound by an outermost exists block (the usual QDIMACS
// convention). Variable ids are the DIMACS numbers, named x<id>.
//
// Errors are ParseError with the line of the offending token.
PrenexQbf parse_qdimacs(std::string_view input);

// Throws QbfError when the matrix is not a conjunction of clauses.
std::string print_qdimacs(const PrenexQbf& q);

}  // namespace qbflab
