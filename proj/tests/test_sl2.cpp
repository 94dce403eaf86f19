#include "doctest.h"

#include <random>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/sl2.hpp"

using namespace bouillabaisse;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }

NumberField golden_square() { return NumberField::generated_by(isolate_real_roots(P("X^2-3X+1")).back()); }

FieldElement E(const NumberField& k, std::string_view rep) { return {k, P(rep)}; }

std::pair<Mat2, Mat2> generators(const NumberField& k) {
    const FieldElement zero(k, Rational(0)), one(k, Rational(1)), t = FieldElement::generator(k);
    return {Mat2(one, t, zero, one), Mat2(one, zero, one, one)};
}

std::string random_word(std::mt19937_64& rng, int length) {
    static const char letters[] = "hvHV";
    std::uniform_int_distribution<int> pick(0, 3);
    std::string w;
    for (int i = 0; i < length; ++i) w += letters[pick(rng)];
    return w;
}

}  // namespace

TEST_CASE("word evaluation") {
    const NumberField k = golden_square();
    const auto [ph, pv] = generators(k);
    CHECK(evaluate_word("", ph, pv) == Mat2::identity(k));
    const Mat2 hv = evaluate_word("hv", ph, pv);
    CHECK(hv.a() == E(k, "1+X"));
    CHECK(hv.b() == E(k, "X"));
    CHECK(hv.c() == E(k, "1"));
    CHECK(hv.d() == E(k, "1"));
    CHECK(hv.trace() == E(k, "2+X"));
    CHECK(evaluate_word("hH", ph, pv) == Mat2::identity(k));
    CHECK(evaluate_word("h H v V", ph, pv) == Mat2::identity(k));
    CHECK(to_string(parse_word("hvHV")) == "hvHV");
    CHECK_THROWS_AS(parse_word("hx"), Error);

    const NumberField other = NumberField::generated_by(isolate_real_roots(P("X^2-2")).back());
    const auto [qh, qv] = generators(other);
    CHECK_THROWS_AS(evaluate_word("hv", ph, qv), Error);
    CHECK_THROWS_AS(ph * qh, Error);
    const FieldElement one(k, Rational(1));
    CHECK_THROWS_AS(Mat2(one, one, one, one), Error);
}

TEST_CASE("classification") {
    const NumberField q = NumberField::rationals();
    auto R = [&](long v) { return FieldElement(q, Rational(v)); };
    CHECK(classify(Mat2(R(1), R(1), R(0), R(1))) == ElementClass::parabolic);
    CHECK(classify(Mat2(R(0), R(-1), R(1), R(0))) == ElementClass::elliptic);
    CHECK(classify(Mat2::identity(q)) == ElementClass::identity);
    CHECK(classify(Mat2(R(-1), R(0), R(0), R(-1))) == ElementClass::minus_identity);
    CHECK(classify(Mat2(R(-1), R(3), R(0), R(-1))) == ElementClass::parabolic);
    CHECK(classify(Mat2(R(2), R(1), R(1), R(1))) == ElementClass::hyperbolic);
    CHECK(to_string(ElementClass::minus_identity) == "minus_identity");

    const NumberField k = golden_square();
    const auto [ph, pv] = generators(k);
    CHECK(classify(ph * pv) == ElementClass::hyperbolic);
    CHECK(classify(ph) == ElementClass::parabolic);
    CHECK(classify(pv) == ElementClass::parabolic);

    // trace sqrt 2 lies strictly between -2 and 2
    const NumberField r2 = NumberField::generated_by(isolate_real_roots(P("X^2-2")).back());
    const FieldElement s(r2, P("X")), z(r2, Rational(0)), one(r2, Rational(1));
    // [[s, -1], [1, 0]] has determinant 1 and trace sqrt 2
    CHECK(classify(Mat2(s, -one, one, z)) == ElementClass::elliptic);
}

TEST_CASE("determinant and class invariance on random words (property)") {
    std::mt19937_64 rng(31);
    const NumberField k = golden_square();
    const auto [ph, pv] = generators(k);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string w = random_word(rng, 1 + trial % 20);
        const Mat2 m = evaluate_word(w, ph, pv);
        CHECK(m.determinant() == Rational(1));
        const Mat2 g = evaluate_word(random_word(rng, 1 + trial % 5), ph, pv);
        const ElementClass cls = classify(m);
        CHECK(classify(m.inverse()) == cls);
        CHECK(classify(g * m * g.inverse()) == cls);
        // the reversed word with inverted letters is the inverse
        std::string inverse_word;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            inverse_word += static_cast<char>(std::islower(*it) ? std::toupper(*it) : std::tolower(*it));
        CHECK(m * evaluate_word(inverse_word, ph, pv) == Mat2::identity(k));
    }
}
