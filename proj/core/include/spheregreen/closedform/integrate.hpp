#pragma once

#include "spheregreen/closedform/expression.hpp"

namespace spheregreen::closedform {

// Antiderivative in R of c(t,R) D^{d/2} log-factor, term by term; the
// constant of integration is whatever the rules produce.
RationalLogExpression antiderivative(const RationalLogExpression& e);

// Antiderivative of a single R^k D^{d_half/2} log-factor (cached).
const RationalLogExpression& antiderivative_monomial(int k, int d_half, LogKind log);

// Rewrites an expression in s as one in R = 1/s (R > 0).
RationalLogExpression substitute_reciprocal(const RationalLogExpression& e);

// Constant term of the expansion at R -> 0 with negative powers and ln R
// dropped; equals the limit whenever the limit exists.
ClosedExpression finite_part_at_zero(const RationalLogExpression& e);

ClosedExpression evaluate_at_one(const RationalLogExpression& e);

// A function of t alone as an R-independent expression.
RationalLogExpression as_constant(const ClosedExpression& c);

}  // namespace spheregreen::closedform
