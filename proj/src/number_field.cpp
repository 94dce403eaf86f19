#include "bouillabaisse/number_field.hpp"

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/factor.hpp"
#include "bouillabaisse/resultant.hpp"

namespace bouillabaisse {

namespace {

const Rational kInitialWidth(1, 256);

// Finer isolations shrink quadratically under QIR, so squaring the target
// width each round keeps the number of rounds logarithmic.
Rational next_width(const Rational& w) {
    Rational next = w * w;
    return next < Rational(1, 1000000) ? w / 1024 : next;
}

}  // namespace

NumberField NumberField::create(const Polynomial& minpoly, const Interval& embedding) {
    if (minpoly.degree() < 1) throw Error(ErrorCode::InvalidInput, "minimal polynomial must be nonconstant");
    Polynomial m = monic(minpoly);
    if (!is_irreducible(m)) throw Error(ErrorCode::NotIrreducible, to_pretty(m) + " is reducible over Q");
    AlgebraicReal generator = AlgebraicReal::from_isolation(m, embedding);
    return NumberField(std::make_shared<const Data>(Data{std::move(m), std::move(generator)}));
}

NumberField NumberField::generated_by(const AlgebraicReal& a) { return create(minimal_polynomial(a), a.isolation()); }

NumberField NumberField::rationals() {
    static const NumberField q = create(Polynomial::x(), Interval::point(Rational(0)));
    return q;
}

bool operator==(const NumberField& a, const NumberField& b) {
    if (a.data_ == b.data_) return true;
    return a.minpoly() == b.minpoly() && a.generator() == b.generator();
}

FieldElement::FieldElement(NumberField field, const Polynomial& rep)
    : field_(std::move(field)), rep_(rep % field_.minpoly()) {}

FieldElement::FieldElement(NumberField field, const Rational& value)
    : field_(std::move(field)), rep_(Polynomial::constant(value)) {}

FieldElement FieldElement::generator(const NumberField& field) { return {field, Polynomial::x()}; }

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) {
        throw Error(ErrorCode::FieldMismatch, describe(a.field()) + " vs " + describe(b.field()));
    }
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + describe(field_));
    ExtendedGcd e = extended_gcd(rep_, field_.minpoly());
    if (e.gcd.degree() != 0) {
        throw Error(ErrorCode::InternalInconsistency, "element shares a factor with the minimal polynomial");
    }
    return {field_, e.s};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.rep_ + b.rep_};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.rep_ - b.rep_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.rep_ * b.rep_};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.rep_ == b.rep_;
}

int nf_sign(const FieldElement& u) {
    if (u.is_rational()) return sign(u.rep().coeff(0));
    for (Rational width = kInitialWidth;; width = next_width(width)) {
        const Interval value = evaluate(u.rep(), u.field().generator().refine(width).isolation());
        if (value.lo > 0) return 1;
        if (value.hi < 0) return -1;
    }
}

Interval enclose(const FieldElement& u, const Rational& width) {
    if (width <= 0) throw Error(ErrorCode::InvalidInput, "enclosure width must be positive");
    if (u.is_rational()) return Interval::point(u.rep().coeff(0));
    for (Rational w = kInitialWidth;; w = next_width(w)) {
        const Interval value = evaluate(u.rep(), u.field().generator().refine(w < width ? w : width).isolation());
        if (value.width() <= width) return value;
    }
}

Certificate is_totally_real_field(const NumberField& field) {
    Certificate cert(Question::totally_real);
    cert.add_polynomial("minpoly", field.minpoly());
    cert.add_count("minpoly", CountKind::real_roots);
    cert.add_count("minpoly", CountKind::degree);
    cert.outcome = derive_outcome(cert);
    cert.verdict = verdict_of(cert.question, cert.outcome);
    return cert;
}

Polynomial minimal_polynomial(const AlgebraicReal& a) {
    if (a.is_rational()) return Polynomial({-a.isolation().lo, Rational(1)});
    for (const Factor& f : factor_rational(a.defining())) {
        if (count_real_roots(f.factor, a.isolation()) == 1) return f.factor;
    }
    throw Error(ErrorCode::InternalInconsistency, "no factor of " + to_pretty(a.defining()) + " vanishes at the root");
}

AlgebraicReal trace_plus_inverse(const Polynomial& p, const AlgebraicReal& lambda) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "zero polynomial");
    if (p.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, to_pretty(p) + " vanishes at 0");
    {
        const Polynomial shared = gcd(p, lambda.defining());
        if (shared.degree() < 1 || count_real_roots(shared, lambda.isolation()) != 1) {
            throw Error(ErrorCode::InvalidInput, "the designated root is not a root of " + to_pretty(p));
        }
    }

    // Res_Y(p(Y), Y^2 - X Y + 1) vanishes exactly at z + 1/z for the roots z of p.
    BivariatePolynomial py;
    for (const Rational& c : p.coefficients()) py.push_back(Polynomial::constant(c));
    const BivariatePolynomial quadric{Polynomial::constant(Rational(1)), -Polynomial::x(),
                                      Polynomial::constant(Rational(1))};
    const std::vector<Factor> factors = factor_rational(square_free_part(resultant_y(py, quadric)));

    for (Rational width = kInitialWidth;; width = next_width(width)) {
        const Interval root = lambda.refine(width).isolation();
        if (!root.excludes_zero()) continue;
        // x + 1/x over [lo, hi] lies in [lo + 1/hi, hi + 1/lo] whenever 0 is excluded.
        const Interval image(root.lo + 1 / root.hi, root.hi + 1 / root.lo);
        const Polynomial* hit = nullptr;
        int total = 0;
        for (const Factor& f : factors) {
            const int c = count_real_roots(f.factor, image);
            total += c;
            if (c == 1) hit = &f.factor;
        }
        if (total == 1) return AlgebraicReal::from_isolation(*hit, image);
    }
}

Polynomial trace_plus_inverse_minpoly(const Polynomial& p, const AlgebraicReal& lambda) {
    return trace_plus_inverse(p, lambda).defining();
}

std::string describe(const NumberField& field) {
    if (field.is_rationals()) return "Q";
    return "Q[t]/(" + to_pretty(field.minpoly()) + ")";
}

}  // namespace bouillabaisse
