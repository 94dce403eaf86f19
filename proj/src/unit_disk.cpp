#include "bouillabaisse/unit_disk.hpp"

#include <vector>

#include "bouillabaisse/charpoly.hpp"
#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

namespace detail {

std::optional<int> schur_cohn_reduction(const Polynomial& p) {
    // N(p) = offset + orientation * N(current)
    int offset = 0;
    int orientation = 1;
    Polynomial current = primitive_part(p);
    while (current.degree() > 0) {
        const int n = current.degree();
        const Rational& lead = current.leading();
        const Rational constant = current.coeff(0);
        const Rational lead_abs = abs(lead);
        const Rational const_abs = abs(constant);
        if (lead_abs == const_abs) {
            return std::nullopt;
        }
        // X * T = lead * q - constant * q*; Rouche on |X| = 1 against the
        // larger of the two terms.
        const Polynomial scaled = lead * current - constant * reciprocal(current);
        auto [shift, transformed] = split_power_of_x(scaled);
        if (lead_abs > const_abs) {
            offset += orientation * static_cast<int>(shift);
        } else {
            // N(X T) = N(q*) = n - N(q)
            offset += orientation * (n - static_cast<int>(shift));
            orientation = -orientation;
        }
        current = primitive_part(transformed);
    }
    return offset;
}

std::optional<int> schur_cohn_form_count(const Polynomial& p) {
    const int degree = p.degree();
    if (degree < 1) {
        return 0;
    }
    const auto n = static_cast<std::size_t>(degree);
    // H = U^T U - V^T V with U, V upper-triangular Toeplitz built from the
    // coefficients read from the top (U) and from the bottom (V).
    std::vector<Rational> u(n * n), v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            u[i * n + j] = p.coeff(n - (j - i));
            v[i * n + j] = p.coeff(j - i);
        }
    }
    std::vector<Rational> h(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < n; ++k) acc += u[k * n + i] * u[k * n + j] - v[k * n + i] * v[k * n + j];
            h[i * n + j] = std::move(acc);
        }
    }
    const Polynomial chi = faddeev_leverrier(h, n);
    if (chi.coeff(0) == 0) {
        return std::nullopt;
    }
    // chi is real-rooted, so Descartes' rule counts positive eigenvalues exactly.
    int variations = 0;
    int last = 0;
    for (const auto& c : chi.coefficients()) {
        const int s = sign(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace detail

int count_roots_in_unit_disk(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "unit-disk count of the zero polynomial");
    }
    auto [zeros_at_origin, rest] = split_power_of_x(p);
    if (rest(Rational(1)) == 0 || rest(Rational(-1)) == 0) {
        throw Error(ErrorCode::BoundaryRoot, to_pretty(p) + " vanishes at 1 or -1");
    }
    if (gcd(rest, reciprocal(rest)).degree() > 0) {
        throw Error(ErrorCode::BoundaryRoot, to_pretty(p) + " shares a factor with its reciprocal polynomial");
    }
    const int base = static_cast<int>(zeros_at_origin);
    if (auto count = detail::schur_cohn_reduction(rest)) {
        return base + *count;
    }
    if (auto count = detail::schur_cohn_form_count(rest)) {
        return base + *count;
    }
    throw Error(ErrorCode::InternalInconsistency, "Schur-Cohn form singular for " + to_pretty(p));
}

}  // namespace bouillabaisse
