#pragma once

#include <optional>

#include "bouillabaisse/polynomial.hpp"

namespace bouillabaisse {

/// Number of roots of p (with multiplicity) of modulus < 1. Powers of X are
/// split off first and counted inside. Throws BoundaryRoot when p(1) = 0,
/// p(-1) = 0, or p shares a factor with its reciprocal; the last test is
/// conservative (it also rejects reciprocal pairs off the circle).
int count_roots_in_unit_disk(const Polynomial& p);

namespace detail {

/// Schur transform recursion alone; nullopt when a step is singular
/// (|p(0)| = |leading coefficient|). Requires p(0) != 0 and no roots on the
/// unit circle.
std::optional<int> schur_cohn_reduction(const Polynomial& p);

/// Positive inertia of the Schur-Cohn Hermitian form; nullopt when the form is
/// singular. Requires p(0) != 0.
std::optional<int> schur_cohn_form_count(const Polynomial& p);

}  // namespace detail

}  // namespace bouillabaisse
