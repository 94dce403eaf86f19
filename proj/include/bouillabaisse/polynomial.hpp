#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bouillabaisse/rational.hpp"

namespace bouillabaisse {

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t power);
    static Polynomial x() { return monomial(Rational(1), 1); }
    /// Integer coefficients, constant term first: from_ints({-1, 0, 1}) = X^2 - 1.
    static Polynomial from_ints(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool has_integer_coefficients() const;

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of X^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// p = q * quotient + remainder with deg(remainder) < deg(q).
/// Throws DivisionByZero when q is zero.
DivRem divrem(const Polynomial& p, const Polynomial& q);
Polynomial operator/(const Polynomial& p, const Polynomial& q);
Polynomial operator%(const Polynomial& p, const Polynomial& q);

Polynomial derivative(const Polynomial& p);
Polynomial monic(const Polynomial& p);
Polynomial pow(const Polynomial& p, unsigned exponent);

/// p(q(X)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// X^deg(p) * p(1/X).
Polynomial reciprocal(const Polynomial& p);

/// Positive rational c with p / c primitive with integer coefficients.
/// Zero for the zero polynomial.
Rational content(const Polynomial& p);
/// p / content(p): integer coefficients, gcd 1, same sign of leading coefficient.
Polynomial primitive_part(const Polynomial& p);
std::vector<Integer> integer_coefficients(const Polynomial& p);

/// Number of times X divides p, and p / X^k. p must be nonzero.
std::pair<std::size_t, Polynomial> split_power_of_x(const Polynomial& p);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial s;    // s*p + t*q = gcd
    Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q);

/// Monic polynomial with the roots of p, each of multiplicity one.
Polynomial square_free_part(const Polynomial& p);

/// Canonical text form "c0 + c1*X + c2*X^2", zero terms omitted, "0" for the
/// zero polynomial. Parsing this form and re-emitting it is the identity.
std::string to_text(const Polynomial& p);
/// Human form, highest degree first with implicit unit coefficients:
/// "X^3-X^2-X-1".
std::string to_pretty(const Polynomial& p);
/// Accepts both forms above, plus implicit multiplication ("2X^2") and
/// lowercase x. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace bouillabaisse
