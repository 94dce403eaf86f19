#include "doctest.h"

#include <cstdlib>
#include <random>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/factor.hpp"
#include "generators.hpp"

using namespace bouillabaisse;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }

Polynomial reconstruct(const std::vector<Factor>& factors) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (const auto& f : factors) acc *= pow(f.factor, f.multiplicity);
    return acc;
}

// Rational-root-theorem brute force: for degree <= 3, reducible over Q iff a
// rational root exists.
bool has_rational_root(const Polynomial& p) {
    const Polynomial prim = primitive_part(p);
    auto [k, rest] = split_power_of_x(prim);
    if (k > 0) return true;
    const Integer a0 = abs(rest.coeff(0).get_num());
    const Integer an = abs(rest.leading().get_num());
    for (Integer num = 1; num <= a0; ++num) {
        if (a0 % num != 0) continue;
        for (Integer den = 1; den <= an; ++den) {
            if (an % den != 0) continue;
            const Rational r = make_rational(num, den);
            if (rest(r) == 0 || rest(Rational(-r)) == 0) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("factor examples") {
    CHECK(factor_rational(P("X^2-1")) == std::vector<Factor>{{P("X-1"), 1}, {P("X+1"), 1}});
    CHECK(factor_rational(P("X^3-X^2-X-1")) == std::vector<Factor>{{P("X^3-X^2-X-1"), 1}});
    CHECK(factor_rational(P("X^2-4X")) == std::vector<Factor>{{P("X-4"), 1}, {P("X"), 1}});
    CHECK(factor_rational(P("3X^2-6")) == std::vector<Factor>{{P("X^2-2"), 1}});
    CHECK(factor_rational(P("7")).empty());
    CHECK(factor_rational(P("X-1/2")) == std::vector<Factor>{{P("X-1/2"), 1}});

    // Swinnerton-Dyer style: X^4 - 10X^2 + 1 splits into quadratics modulo every prime
    CHECK(factor_rational(P("X^4-10X^2+1")).size() == 1);
    // X^4 + 1 is irreducible over Q, reducible modulo every prime
    CHECK(is_irreducible(P("X^4+1")));

    const Polynomial mixed = pow(P("X-1"), 3) * pow(P("X^2+1"), 2) * P("X^3-X-1") * P("2X+3");
    const auto factors = factor_rational(mixed);
    CHECK(reconstruct(factors) == monic(mixed));
    CHECK(factors == std::vector<Factor>{{P("X-1"), 3}, {P("X+3/2"), 1}, {P("X^2+1"), 2}, {P("X^3-X-1"), 1}});
}

TEST_CASE("Arnoux-Yoccoz polynomials are irreducible") {
    for (int n = 2; n <= 16; ++n) {
        std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(-1));
        c.back() = 1;
        CHECK_MESSAGE(is_irreducible(Polynomial(c)), "n = " << n);
    }
}

TEST_CASE("cyclotomic splitting of X^n - 1") {
    // X^12 - 1 has one factor per divisor of 12
    const auto factors = factor_rational(P("X^12-1"));
    CHECK(factors.size() == 6);
    CHECK(reconstruct(factors) == P("X^12-1"));
    const auto f30 = factor_rational(P("X^30-1"));
    CHECK(f30.size() == 8);
}

TEST_CASE("factorization reconstructs random products (property)") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = Polynomial::constant(Rational(1));
        const int parts = 1 + trial % 4;
        for (int i = 0; i < parts; ++i) p *= testgen::random_polynomial(rng, 1 + (trial + i) % 4, 7);
        if (trial % 6 == 0) p *= p;
        const auto factors = factor_rational(p);
        CHECK(reconstruct(factors) == monic(p));
        for (const auto& f : factors) {
            CHECK(f.factor.is_monic());
            if (f.factor.degree() <= 3) CHECK(!has_rational_root(f.factor) == (f.factor.degree() > 1));
        }
    }
}

TEST_CASE("low-degree irreducibility agrees with the rational-root oracle") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = testgen::random_polynomial(rng, 2 + trial % 2, 12);
        const bool reducible = has_rational_root(p);
        CHECK(is_irreducible(p) == !reducible);
    }
}

TEST_CASE("square-free decomposition") {
    const auto pieces = square_free_decomposition(pow(P("X-1"), 2) * P("X+2") * pow(P("X^2+1"), 3));
    CHECK(pieces == std::vector<Factor>{{P("X+2"), 1}, {P("X-1"), 2}, {P("X^2+1"), 3}});
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(factor_rational(P("X^5-1"), 4), Error);
    try {
        factor_rational(P("X^40+1"));
        FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooLarge);
    }
    setenv("BOUILLABAISSE_FACTOR_DEGREE_CAP", "48", 1);
    CHECK(factor_degree_cap() == 48);
    CHECK(is_irreducible(P("X^40+1")) == false);  // X^40+1 = Phi_16 Phi_80
    setenv("BOUILLABAISSE_FACTOR_DEGREE_CAP", "garbage", 1);
    CHECK(factor_degree_cap() == kDefaultFactorDegreeCap);
    unsetenv("BOUILLABAISSE_FACTOR_DEGREE_CAP");
}
