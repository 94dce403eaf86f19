#include "bouillabaisse/resultant.hpp"

#include <utility>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

namespace {

bool is_zero(const Rational& r) { return r == 0; }
bool is_zero(const Polynomial& r) { return r.is_zero(); }

Rational power(const Rational& r, unsigned k) { return pow(r, k); }
Polynomial power(const Polynomial& r, unsigned k) { return pow(r, k); }

Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [quotient, remainder] = divrem(a, b);
    if (!remainder.is_zero()) throw Error(ErrorCode::InternalInconsistency, "inexact subresultant division");
    return quotient;
}

template <class R>
R one() {
    if constexpr (std::is_same_v<R, Rational>) {
        return Rational(1);
    } else {
        return Polynomial::constant(Rational(1));
    }
}

// Dense polynomial over an exact domain R, constant term first, no trailing zeros.
template <class R>
struct Dense {
    std::vector<R> c;

    explicit Dense(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const R& lead() const { return c.back(); }
};

// lc(b)^(deg a - deg b + 1) * a mod b, using only ring operations.
template <class R>
Dense<R> pseudo_remainder(Dense<R> a, const Dense<R>& b) {
    const int db = b.degree();
    int steps = a.degree() - db + 1;
    while (!a.c.empty() && a.degree() >= db) {
        const R lead = a.lead();
        const int shift = a.degree() - db;
        for (auto& x : a.c) x = b.lead() * x;
        for (int i = 0; i <= db; ++i) a.c[i + shift] = a.c[i + shift] - lead * b.c[i];
        a.trim();
        --steps;
    }
    if (steps > 0) {
        const R scale = power(b.lead(), static_cast<unsigned>(steps));
        for (auto& x : a.c) x = scale * x;
    }
    return a;
}

template <class R>
R subresultant(Dense<R> a, Dense<R> b) {
    if (a.c.empty() || b.c.empty()) return R();
    R sign = one<R>();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    if (b.degree() == 0) return sign * power(b.lead(), static_cast<unsigned>(a.degree()));

    R g = one<R>();
    R h = one<R>();
    while (b.degree() > 0) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        Dense<R> r = pseudo_remainder(a, b);
        if (r.c.empty()) return R();
        a = std::move(b);
        const R divisor = g * power(h, static_cast<unsigned>(delta));
        for (auto& x : r.c) x = exact_quotient(x, divisor);
        b = std::move(r);
        g = a.lead();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_quotient(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
        }
    }
    const unsigned da = static_cast<unsigned>(a.degree());
    const R last = exact_quotient(power(b.lead(), da), power(h, da - 1));
    return sign * last;
}

}  // namespace

Rational resultant(const Polynomial& p, const Polynomial& q) {
    return subresultant(Dense<Rational>(p.coefficients()), Dense<Rational>(q.coefficients()));
}

Polynomial resultant_y(const BivariatePolynomial& p, const BivariatePolynomial& q) {
    return subresultant(Dense<Polynomial>(p), Dense<Polynomial>(q));
}

}  // namespace bouillabaisse
