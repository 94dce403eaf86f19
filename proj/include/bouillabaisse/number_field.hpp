#pragma once

#include <memory>
#include <string>

#include "bouillabaisse/certificate.hpp"
#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/real_roots.hpp"

namespace bouillabaisse {

/// Q[X]/(minpoly) together with a real embedding of the generator. Copies
/// share one immutable representation.
class NumberField {
public:
    /// Verifies that minpoly is irreducible and has exactly one root in
    /// `embedding`. minpoly is made monic. Throws NotIrreducible / InvalidInput.
    static NumberField create(const Polynomial& minpoly, const Interval& embedding);
    /// Q[a], generated by a itself.
    static NumberField generated_by(const AlgebraicReal& a);
    static NumberField rationals();

    const Polynomial& minpoly() const noexcept { return data_->minpoly; }
    int degree() const noexcept { return data_->minpoly.degree(); }
    const AlgebraicReal& generator() const noexcept { return data_->generator; }
    const Interval& embedding() const noexcept { return data_->generator.isolation(); }
    bool is_rationals() const noexcept { return degree() == 1; }

    /// Same minimal polynomial and the same embedded root.
    friend bool operator==(const NumberField& a, const NumberField& b);
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

private:
    struct Data {
        Polynomial minpoly;
        AlgebraicReal generator;
    };
    explicit NumberField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

/// rep(t) for the field generator t, with deg rep < deg minpoly.
class FieldElement {
public:
    FieldElement(NumberField field, const Polynomial& rep);
    FieldElement(NumberField field, const Rational& value);
    static FieldElement generator(const NumberField& field);

    const NumberField& field() const noexcept { return field_; }
    const Polynomial& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_rational() const noexcept { return rep_.is_constant(); }

    /// Throws DivisionByZero for zero.
    FieldElement inverse() const;

    FieldElement operator-() const { return {field_, -rep_}; }
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend FieldElement operator*(const Rational& c, const FieldElement& a) { return {a.field_, c * a.rep_}; }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    /// Throws FieldMismatch for elements of different fields.
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator==(const FieldElement& a, const Rational& q) { return a.rep_ == Polynomial::constant(q); }

private:
    NumberField field_;
    Polynomial rep_;
};

/// Throws FieldMismatch unless a and b live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// Sign of u under the field's embedding, decided by interval evaluation
/// on ever finer isolations of the generator.
int nf_sign(const FieldElement& u);

/// Enclosure of u's embedded value of width <= width (width > 0).
Interval enclose(const FieldElement& u, const Rational& width);

/// The field is totally real iff its minimal polynomial has only real roots.
/// Reads the minimal polynomial only.
Certificate is_totally_real_field(const NumberField& field);

/// The irreducible factor of a.defining() vanishing at a.
Polynomial minimal_polynomial(const AlgebraicReal& a);

/// Minimal polynomial of lambda + 1/lambda, where lambda is the root of p
/// isolated by `lambda`. Throws ZeroConstantTerm when p(0) = 0.
Polynomial trace_plus_inverse_minpoly(const Polynomial& p, const AlgebraicReal& lambda);
/// The same, with an isolating interval for lambda + 1/lambda.
AlgebraicReal trace_plus_inverse(const Polynomial& p, const AlgebraicReal& lambda);

/// "Q" for the rationals, otherwise "Q[t]/(minpoly)".
std::string describe(const NumberField& field);

}  // namespace bouillabaisse
