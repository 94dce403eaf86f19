#pragma once

#include <cstddef>
#include <span>

#include "bouillabaisse/polynomial.hpp"

namespace bouillabaisse {

/// det(X I - A) for a dense n x n rational matrix in row-major order, by the
/// Faddeev-LeVerrier recurrence.
Polynomial faddeev_leverrier(std::span<const Rational> entries, std::size_t n);

}  // namespace bouillabaisse
