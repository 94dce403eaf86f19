#pragma once

#include <vector>

#include "bouillabaisse/polynomial.hpp"

namespace bouillabaisse {

constexpr int kDefaultFactorDegreeCap = 32;

/// The factorization degree cap: BOUILLABAISSE_FACTOR_DEGREE_CAP when set to a
/// positive integer, otherwise kDefaultFactorDegreeCap.
int factor_degree_cap();

struct Factor {
    Polynomial factor;  // monic, irreducible over Q
    unsigned multiplicity = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Square-free decomposition (Yun): monic square-free, pairwise coprime
/// pieces with multiplicities, the product of piece^multiplicity = monic(p).
std::vector<Factor> square_free_decomposition(const Polynomial& p);

/// Monic irreducible factors over Q with multiplicities; their product with
/// multiplicities equals monic(p). Ordered by degree, then coefficients.
/// Throws DegreeTooLarge when deg p exceeds `degree_cap`.
std::vector<Factor> factor_rational(const Polynomial& p, int degree_cap = factor_degree_cap());

bool is_irreducible(const Polynomial& p, int degree_cap = factor_degree_cap());

}  // namespace bouillabaisse
