#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/rational.hpp"

namespace bouillabaisse {

/// Closed rational interval [lo, hi], lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_);
    static Interval point(const Rational& q) { return {q, q}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Rational& c);

/// Enclosure of { p(x) : x in range } by interval Horner evaluation.
Interval evaluate(const Polynomial& p, const Interval& range);

/// Sturm chain of the square-free part, each remainder scaled by its
/// (positive) content. Counts are of distinct real roots.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    const std::vector<Polynomial>& chain() const noexcept { return chain_; }
    const Polynomial& square_free() const { return chain_.front(); }

    int variations_at(const Rational& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;

    int count_all() const;
    /// Roots in the closed interval [range.lo, range.hi].
    int count_in(const Interval& range) const;
    /// Roots strictly greater than x.
    int count_above(const Rational& x) const;

private:
    std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of p (p nonzero), optionally restricted to
/// a closed interval. Endpoints that are roots are counted.
int count_real_roots(const Polynomial& p);
int count_real_roots(const Polynomial& p, const Interval& range);
int count_real_roots_above(const Polynomial& p, const Rational& x);

/// 1 + max |a_i / a_n|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Polynomial& p);

/// A real algebraic number: the unique root of a monic square-free rational
/// polynomial inside a closed isolating interval. Either the interval is a
/// single (rational) root, or the polynomial changes sign strictly across it.
class AlgebraicReal {
public:
    /// Zero.
    AlgebraicReal() : defining_(Polynomial::x()), isolation_(Interval::point(Rational(0))) {}

    /// Verifies that p has exactly one real root in `isolation`; throws
    /// InvalidInput otherwise. p is replaced by its square-free part.
    static AlgebraicReal from_isolation(const Polynomial& p, const Interval& isolation);
    static AlgebraicReal from_rational(const Rational& q);

    const Polynomial& defining() const noexcept { return defining_; }
    const Interval& isolation() const noexcept { return isolation_; }
    bool is_rational() const { return isolation_.lo == isolation_.hi; }

    /// Same root, isolating interval of width <= width (width > 0). Uses
    /// quadratic interval refinement with bisection as the fallback step.
    AlgebraicReal refine(const Rational& width) const;

    /// Sign of (this - q), decided exactly.
    int compare(const Rational& q) const;

    /// Midpoint of a refined interval; display and test oracles only.
    double approximate() const;

    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);

private:
    AlgebraicReal(Polynomial defining, Interval isolation)
        : defining_(std::move(defining)), isolation_(std::move(isolation)) {}

    friend std::vector<AlgebraicReal> isolate_real_roots(const Polynomial& p);

    Polynomial defining_;
    Interval isolation_;
};

/// One entry per distinct real root, ascending, pairwise disjoint intervals.
/// Initial bracket from the Cauchy bound, bisection driven by Sturm counts.
std::vector<AlgebraicReal> isolate_real_roots(const Polynomial& p);

inline AlgebraicReal refine(const AlgebraicReal& a, const Rational& width) { return a.refine(width); }

}  // namespace bouillabaisse
