#pragma once

#include <vector>

#include "bouillabaisse/polynomial.hpp"

namespace bouillabaisse {

/// Res(p, q) of univariate rational polynomials; zero if either is zero.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// Polynomial in Y whose coefficients (constant term first) lie in Q[X].
using BivariatePolynomial = std::vector<Polynomial>;

/// Res_Y(p, q) as an element of Q[X].
Polynomial resultant_y(const BivariatePolynomial& p, const BivariatePolynomial& q);

}  // namespace bouillabaisse
