#include "doctest.h"

#include <random>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/real_roots.hpp"
#include "bouillabaisse/unit_disk.hpp"
#include "generators.hpp"
#include "oracle/bisection.hpp"
#include "oracle/numeric_roots.hpp"

using namespace bouillabaisse;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }
Rational Q(std::string_view text) { return parse_rational(text); }

}  // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(to_string(Q("6/4")) == "3/2");
    CHECK(to_string(Q("-10/5")) == "-2");
    CHECK(to_string(Q("+7")) == "7");
    CHECK_THROWS_AS(Q("1/0"), Error);
    CHECK_THROWS_AS(Q("1/-2"), Error);
    CHECK_THROWS_AS(Q("abc"), Error);
    CHECK(to_decimal_floor(Q("-1/3"), 3) == "-0.334");
    CHECK(to_decimal_ceil(Q("-1/3"), 3) == "-0.333");
    CHECK(to_decimal_floor(Q("7/4"), 1) == "1.7");
}

TEST_CASE("polynomial ring arithmetic") {
    CHECK(P("X-1") * P("X^2+X+1") == P("X^3-1"));
    CHECK(P("X^2-2") + Polynomial() == P("X^2-2"));
    // (X - 1) P_3 = X^4 - 2X^3 + 1
    CHECK(P("X-1") * P("X^3-X^2-X-1") == P("X^4-2X^3+1"));
    CHECK((P("X^2") - P("X^2")).is_zero());
    CHECK(Polynomial().degree() == -1);

    auto [quot, rem] = divrem(P("X^3+2X+5"), P("2X-1"));
    CHECK(P("2X-1") * quot + rem == P("X^3+2X+5"));
    CHECK(rem.degree() < 1);
    CHECK_THROWS_AS(divrem(P("X"), Polynomial()), Error);
}

TEST_CASE("gcd and square-free part") {
    CHECK(gcd(P("X^2-1"), P("X^2-2X+1")) == P("X-1"));
    CHECK(gcd(P("3X^2-6"), P("3X^2-6")) == P("X^2-2"));
    CHECK(gcd(P("X^2+1"), P("X-1")) == P("1"));
    CHECK(square_free_part(P("X-1") * P("X-1") * P("X+2")) == P("X^2+X-2"));
    CHECK(square_free_part(P("X^2-2")) == P("X^2-2"));
    CHECK(square_free_part(P("3X^2-6")) == P("X^2-2"));
    CHECK(square_free_part(pow(P("X^3-1"), 2)) == P("X^3-1"));

    auto eg = extended_gcd(P("X^2-2"), P("X"));
    CHECK(eg.gcd == P("1"));
    CHECK(eg.s * P("X^2-2") + eg.t * P("X") == P("1"));
}

TEST_CASE("gcd divides both inputs (property)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial common = testgen::random_polynomial(rng, trial % 3, 4);
        const Polynomial a = common * testgen::random_polynomial(rng, 1 + trial % 4, 5);
        const Polynomial b = common * testgen::random_polynomial(rng, 1 + trial % 3, 5);
        const Polynomial g = gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK((g % monic(common)).is_zero());
    }
}

TEST_CASE("polynomial text forms") {
    const Polynomial p3 = P("X^3-X^2-X-1");
    CHECK(p3.coefficients() == std::vector<Rational>{-1, -1, -1, 1});
    CHECK(to_text(p3) == "-1 + -1*X + -1*X^2 + 1*X^3");
    CHECK(to_pretty(p3) == "X^3-X^2-X-1");
    CHECK(P(to_text(p3)) == p3);
    CHECK(to_text(P("1/2 - 3/4*x^2")) == "1/2 + -3/4*X^2");
    CHECK(to_pretty(P("1/2 - 3/4*x^2")) == "-3/4*X^2+1/2");
    CHECK(to_text(Polynomial()) == "0");
    CHECK(P("0").is_zero());
    CHECK(P("2X^2 + 2*X") == P("2*X^2+2X^1"));
    CHECK_THROWS_AS(P(""), Error);
    CHECK_THROWS_AS(P("X^"), Error);
    CHECK_THROWS_AS(P("X X"), Error);
    CHECK_THROWS_AS(P("Y+1"), Error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = testgen::random_polynomial(rng, trial % 7, 9) * Polynomial::constant(Rational(1, 1 + trial % 5));
        CHECK(P(to_text(p)) == p);
        CHECK(to_text(P(to_text(p))) == to_text(p));
        CHECK(P(to_pretty(p)) == p);
    }
}

TEST_CASE("Sturm counts") {
    CHECK(count_real_roots(P("X^2+1")) == 0);
    CHECK(count_real_roots(P("X^3-X^2-X-1")) == 1);
    CHECK(count_real_roots(P("X^4-X^3-X^2-X-1")) == 2);
    CHECK(count_real_roots(pow(P("X-1"), 3) * P("X+1")) == 2);
    CHECK(count_real_roots(P("X^2-2"), Interval(Q("0"), Q("2"))) == 1);
    // endpoints that are roots are counted
    CHECK(count_real_roots(P("X^2-1"), Interval(Q("-1"), Q("1"))) == 2);
    CHECK(count_real_roots(P("X^2-1"), Interval(Q("1"), Q("1"))) == 1);
    CHECK(count_real_roots(P("X^2-1"), Interval(Q("-1/2"), Q("1/2"))) == 0);
    CHECK(count_real_roots_above(P("X^2-1"), Q("1")) == 0);
    CHECK(count_real_roots_above(P("X^2-1"), Q("-1")) == 1);
    CHECK(count_real_roots(P("5")) == 0);
}

TEST_CASE("root isolation and refinement") {
    auto roots = isolate_real_roots(P("X^2-2"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].isolation().hi < 0);
    CHECK(roots[0].isolation().hi < roots[1].isolation().lo);
    CHECK(count_real_roots(P("X^2-2"), roots[0].isolation()) == 1);
    CHECK(count_real_roots(P("X^2-2"), roots[1].isolation()) == 1);
    CHECK(isolate_real_roots(P("X^2+1")).empty());

    const Rational micro(1, 1000000);
    const AlgebraicReal sqrt2 = roots[1].refine(micro);
    CHECK(sqrt2.isolation().width() <= micro);
    CHECK(sqrt2.isolation().contains(Q("1414213/1000000")) == false);  // 1.414213 < sqrt 2
    CHECK(sqrt2.isolation().lo > Q("1414213/1000000"));
    CHECK(sqrt2.isolation().hi < Q("1414214/1000000"));
    CHECK(roots[1].isolation().contains(sqrt2.isolation()));

    const auto three = isolate_real_roots(P("X-3"));
    REQUIRE(three.size() == 1);
    CHECK(three[0].refine(Q("1/10")).isolation() == Interval::point(Q("3")));

    // P_3: one real root; compare against a plain bisection oracle
    const Polynomial p3 = P("X^3-X^2-X-1");
    const auto lambda = isolate_real_roots(p3);
    REQUIRE(lambda.size() == 1);
    const AlgebraicReal fine = lambda[0].refine(Q("1/10000"));
    CHECK(fine.isolation().lo > Q("18392/10000"));
    CHECK(fine.isolation().hi < Q("18394/10000"));
    const Interval reference = oracle::bisect(p3, Q("1"), Q("2"), Q("1/100000000"));
    CHECK(fine.isolation().lo <= reference.hi);
    CHECK(reference.lo <= fine.isolation().hi);

    CHECK(fine.compare(Q("1")) == 1);
    CHECK(fine.compare(Q("2")) == -1);
    CHECK(three[0].compare(Q("3")) == 0);
    CHECK(fine == lambda[0]);
    CHECK_THROWS_AS(AlgebraicReal::from_isolation(P("X^2-2"), Interval(Q("-2"), Q("2"))), Error);
}

TEST_CASE("isolation invariants on random polynomials") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        Polynomial p = testgen::random_polynomial(rng, 1 + trial % 8, 6);
        if (trial % 5 == 0) p *= P("2X-1") * P("2X-1");  // repeated and rational roots
        const auto roots = isolate_real_roots(p);
        CHECK(static_cast<int>(roots.size()) == count_real_roots(p));
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(count_real_roots(p, roots[i].isolation()) == 1);
            if (i + 1 < roots.size()) CHECK(roots[i].isolation().hi < roots[i + 1].isolation().lo);
            const AlgebraicReal r = roots[i].refine(Rational(1, 1 << 20));
            CHECK(roots[i].isolation().contains(r.isolation()));
            CHECK(r.isolation().width() <= Rational(1, 1 << 20));
            CHECK(count_real_roots(p, r.isolation()) == 1);
        }
    }
}

TEST_CASE("real root counts agree with the numeric oracle") {
    std::mt19937_64 rng(31);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = testgen::random_polynomial(rng, 1 + trial % 8, 10);
        const Polynomial sf = square_free_part(p);
        const auto census = oracle::census(sf);
        if (!census) continue;
        ++compared;
        CHECK(count_real_roots(p) == census->real);
        // real + 2 * pairs = degree of the square-free part
        CHECK((sf.degree() - count_real_roots(p)) % 2 == 0);
    }
    CHECK(compared > 250);
}

TEST_CASE("unit disk counts") {
    CHECK(count_roots_in_unit_disk(P("X^2-X-1")) == 1);
    CHECK(count_roots_in_unit_disk(P("X^2-1/4")) == 2);
    CHECK(count_roots_in_unit_disk(P("X^3-X^2-X-1")) == 2);
    CHECK(count_roots_in_unit_disk(P("X^3")) == 3);
    CHECK(count_roots_in_unit_disk(P("X^2-2")) == 0);
    CHECK(count_roots_in_unit_disk(P("X^2-2X")) == 1);
    CHECK(count_roots_in_unit_disk(P("7")) == 0);
    CHECK_THROWS_AS(count_roots_in_unit_disk(P("X^2+1")), Error);
    CHECK_THROWS_AS(count_roots_in_unit_disk(P("X-1")), Error);
    CHECK_THROWS_AS(count_roots_in_unit_disk(P("X+1")), Error);
    CHECK_THROWS_AS(count_roots_in_unit_disk(P("X^2-5/2*X+1")), Error);  // 2 and 1/2: conservative
    try {
        count_roots_in_unit_disk(P("X^2+X+1"));
        FAIL("expected BoundaryRoot");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundaryRoot);
    }
    // singular first step |p(0)| = |lead| but no boundary roots: 2X^2 + 5X + 2 has roots -2, -1/2
    CHECK_THROWS_AS(count_roots_in_unit_disk(P("2X^2+5X+2")), Error);
    // X^3 + 3X^2 + X + 1: singular step, roots off the circle and not reciprocal
    CHECK(count_roots_in_unit_disk(P("X^3+3X^2+X+1")) == 2);
}

TEST_CASE("both Schur-Cohn routes agree with the numeric oracle") {
    std::mt19937_64 rng(41);
    int compared = 0, singular = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Polynomial p = testgen::random_polynomial(rng, 1 + trial % 8, 6);
        const auto census = oracle::census(p);
        if (!census) continue;
        int expected = census->inside_disk;
        int counted = 0;
        try {
            counted = count_roots_in_unit_disk(p);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BoundaryRoot);
            continue;
        }
        ++compared;
        CHECK(counted == expected);
        auto [k, rest] = split_power_of_x(p);
        const auto reduced = detail::schur_cohn_reduction(rest);
        const auto form = detail::schur_cohn_form_count(rest);
        REQUIRE(form.has_value());
        CHECK(*form + static_cast<int>(k) == expected);
        if (reduced) {
            CHECK(*reduced + static_cast<int>(k) == expected);
        } else {
            ++singular;
        }
    }
    CHECK(compared > 300);
    CHECK(singular > 0);
}
