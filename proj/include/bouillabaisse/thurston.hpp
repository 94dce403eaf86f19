#pragma once

#include <optional>
#include <vector>

#include "bouillabaisse/certificate.hpp"
#include "bouillabaisse/matrix.hpp"
#include "bouillabaisse/number_field.hpp"
#include "bouillabaisse/sl2.hpp"

namespace bouillabaisse {

/// Intersection data of two transverse cylinder decompositions: E is r x s
/// (horizontal by vertical cylinders), m has r entries and n has s.
/// c and d optionally fix the twist parameters as polynomials in t; when
/// absent, c = t and d = 1.
struct ThurstonSystem {
    IntMatrix E;
    std::vector<Integer> m;
    std::vector<Integer> n;
    std::optional<Polynomial> c;
    std::optional<Polynomial> d;
};

/// Throws DimensionMismatch, NegativeEntry, ZeroRowOrColumn or InvalidInput.
void validate(const ThurstonSystem& sys);

struct ThurstonDerived {
    ThurstonSystem system;
    IntMatrix Fn;       // E D_n
    IntMatrix Fm;       // tE D_m
    IntMatrix product;  // Fn Fm
    AlgebraicReal perron;
    NumberField field;  // Q[t], embedded at the Perron root
    FieldElement t;
    std::vector<FieldElement> x;    // product x = t x, x_1 = 1
    std::vector<FieldElement> eta;  // c eta = Fm x
    FieldElement c;
    FieldElement d;
};

/// Throws NotPrimitive when Fn Fm is not primitive, plus the errors of
/// validate(). InvalidInput when the overrides give c d != t.
ThurstonDerived build(const ThurstonSystem& sys);

/// Kernel vector of (a - t I) over t's field, first coordinate 1. Throws
/// SingularSystem when the kernel is not one-dimensional.
std::vector<FieldElement> kernel_vector(const IntMatrix& a, const FieldElement& t);

inline const std::vector<FieldElement>& eigenvector_over_field(const ThurstonDerived& derived) { return derived.x; }

/// Widths and heights: (x_i, y_i) for horizontal cylinders, (eta_j, xi_j)
/// for vertical ones.
struct CylinderData {
    std::vector<FieldElement> x, y, xi, eta;
    FieldElement c, d;
};

/// y = c^-1 D_m x and xi = d^-1 D_n eta.
CylinderData cylinder_data(const ThurstonDerived& derived);

struct ParabolicPair {
    Mat2 ph;  // [[1, c], [0, 1]]
    Mat2 pv;  // [[1, 0], [d, 1]]
};
ParabolicPair parabolic_generators(const ThurstonDerived& derived);

/// product D_m^-1 = E D_n tE is symmetric, and the square-free part of
/// charpoly(product) has only real roots. Throws AsymmetryDetected if the
/// matrix is not symmetric.
Certificate symmetrization_check(const ThurstonDerived& derived);

/// Q[t] is totally real. A negative answer throws InternalInconsistency.
Certificate totally_real_certificate(const ThurstonDerived& derived);

/// Checks x = E xi, eta = tE y, D_m x = c y and D_n eta = d xi exactly;
/// failures are recorded as flags, not thrown.
Certificate check_decomposition(const CylinderData& data, const IntMatrix& E, const std::vector<Integer>& m,
                                const std::vector<Integer>& n);

/// Least common multiple of the inverses of the moduli: the smallest
/// positive rational that is an integer multiple of every 1/mu.
/// Throws NonPositiveModulus.
Rational parabolic_from_moduli(const std::vector<Rational>& moduli);

}  // namespace bouillabaisse
