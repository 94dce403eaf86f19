#pragma once

#include <random>

#include "bouillabaisse/matrix.hpp"
#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/thurston.hpp"

namespace testgen {

/// Random integer polynomial with exact degree `degree` and coefficients in
/// [-bound, bound].
inline bouillabaisse::Polynomial random_polynomial(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<bouillabaisse::Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
    long lead = 0;
    while (lead == 0) lead = coeff(rng);
    c.emplace_back(lead);
    return bouillabaisse::Polynomial(std::move(c));
}

/// Random valid system: r, s <= max_size, entries of E in [0, max_entry],
/// m_i, n_j in [1, max_twist]; rejected until E has no zero row or column
/// and Fn Fm is primitive.
inline bouillabaisse::ThurstonSystem random_thurston_system(std::mt19937_64& rng, int max_size = 4,
                                                            long max_entry = 3, long max_twist = 3) {
    using namespace bouillabaisse;
    std::uniform_int_distribution<int> size(1, max_size);
    std::uniform_int_distribution<long> entry(0, max_entry), twist(1, max_twist);
    for (;;) {
        const std::size_t r = static_cast<std::size_t>(size(rng)), s = static_cast<std::size_t>(size(rng));
        ThurstonSystem sys;
        sys.E = IntMatrix(r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j) sys.E(i, j) = entry(rng);
        for (std::size_t i = 0; i < r; ++i) sys.m.emplace_back(twist(rng));
        for (std::size_t j = 0; j < s; ++j) sys.n.emplace_back(twist(rng));
        try {
            validate(sys);
        } catch (const Error&) {
            continue;
        }
        const IntMatrix product = sys.E * IntMatrix::diagonal(sys.n) * transpose(sys.E) * IntMatrix::diagonal(sys.m);
        if (is_primitive(product)) return sys;
    }
}

}  // namespace testgen
