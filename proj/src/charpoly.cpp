#include "bouillabaisse/charpoly.hpp"

#include <vector>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

Polynomial faddeev_leverrier(std::span<const Rational> entries, std::size_t n) {
    if (entries.size() != n * n) {
        throw Error(ErrorCode::DimensionMismatch, "charpoly needs a square matrix");
    }
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<Rational> m(n * n);  // M_0 = 0
    std::vector<Rational> am(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t l = 0; l < n; ++l) acc += entries[i * n + l] * m[l * n + j];
                am[i * n + j] = std::move(acc);
            }
        }
        for (std::size_t i = 0; i < n; ++i) am[i * n + i] += coeffs[n - k + 1];
        m.swap(am);
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) trace += entries[i * n + l] * m[l * n + i];
        }
        coeffs[n - k] = -trace / static_cast<unsigned long>(k);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace bouillabaisse
