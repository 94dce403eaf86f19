#include "bouillabaisse/thurston.hpp"

#include <string>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

namespace {

using Vector = std::vector<FieldElement>;

Vector times(const IntMatrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    const NumberField& k = v.front().field();
    Vector out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        FieldElement sum(k, Rational(0));
        for (std::size_t j = 0; j < a.cols(); ++j) sum += Rational(a(i, j)) * v[j];
        out.push_back(sum);
    }
    return out;
}

Vector diagonal_apply(const std::vector<Integer>& diag, const Vector& v) {
    if (diag.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "diagonal-vector product");
    Vector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Rational(diag[i]) * v[i]);
    return out;
}

Vector scale(const FieldElement& c, const Vector& v) {
    Vector out;
    for (const auto& e : v) out.push_back(c * e);
    return out;
}

bool equal(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

void validate(const ThurstonSystem& sys) {
    const IntMatrix& e = sys.E;
    if (e.rows() == 0 || e.cols() == 0) throw Error(ErrorCode::DimensionMismatch, "E must be nonempty");
    if (sys.m.size() != e.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "m has " + std::to_string(sys.m.size()) + " entries, E has " +
                                                      std::to_string(e.rows()) + " rows");
    }
    if (sys.n.size() != e.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "n has " + std::to_string(sys.n.size()) + " entries, E has " +
                                                      std::to_string(e.cols()) + " columns");
    }
    for (const Integer& v : e.entries())
        if (v < 0) throw Error(ErrorCode::NegativeEntry, "E has a negative entry " + v.get_str());
    for (std::size_t i = 0; i < e.rows(); ++i) {
        bool any = false;
        for (std::size_t j = 0; j < e.cols(); ++j) any = any || e(i, j) != 0;
        if (!any) throw Error(ErrorCode::ZeroRowOrColumn, "row " + std::to_string(i + 1) + " of E is zero");
    }
    for (std::size_t j = 0; j < e.cols(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < e.rows(); ++i) any = any || e(i, j) != 0;
        if (!any) throw Error(ErrorCode::ZeroRowOrColumn, "column " + std::to_string(j + 1) + " of E is zero");
    }
    for (const Integer& v : sys.m)
        if (v < 1) throw Error(ErrorCode::InvalidInput, "m entries must be positive integers");
    for (const Integer& v : sys.n)
        if (v < 1) throw Error(ErrorCode::InvalidInput, "n entries must be positive integers");
}

std::vector<FieldElement> kernel_vector(const IntMatrix& a, const FieldElement& t) {
    if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "kernel of a non-square matrix");
    const std::size_t n = a.rows();
    const NumberField& k = t.field();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vector row;
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement entry(k, Rational(a(i, j)));
            if (i == j) entry -= t;
            row.push_back(entry);
        }
        rows.push_back(row);
    }

    // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t p = rank;
        while (p < n && rows[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(rows[p], rows[rank]);
        const FieldElement inv = rows[rank][col].inverse();
        for (auto& e : rows[rank]) e *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const FieldElement f = rows[r][col];
            for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank + 1 != n) {
        throw Error(ErrorCode::SingularSystem,
                    "kernel of (A - tI) has dimension " + std::to_string(n - rank) + ", expected 1");
    }
    std::size_t free = 0;
    while (free < pivots.size() && pivots[free] == free) ++free;

    Vector v(n, FieldElement(k, Rational(0)));
    v[free] = FieldElement(k, Rational(1));
    for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = -rows[r][free];
    if (v.front().is_zero()) throw Error(ErrorCode::SingularSystem, "kernel vector has a zero first coordinate");
    const FieldElement inv = v.front().inverse();
    for (auto& e : v) e *= inv;
    return v;
}

ThurstonDerived build(const ThurstonSystem& sys) {
    validate(sys);
    const IntMatrix fn = sys.E * IntMatrix::diagonal(sys.n);
    const IntMatrix fm = transpose(sys.E) * IntMatrix::diagonal(sys.m);
    const IntMatrix product = fn * fm;
    const AlgebraicReal perron = perron_root(product);
    const NumberField field = NumberField::generated_by(perron);
    // reduces to the rational value of t when the field is Q
    const FieldElement tt(field, Polynomial::x());

    std::optional<FieldElement> c, d;
    if (sys.c) c = FieldElement(field, *sys.c);
    if (sys.d) d = FieldElement(field, *sys.d);
    if (!c && !d) {
        c = tt;
        d = FieldElement(field, Rational(1));
    } else if (!d) {
        d = tt / *c;
    } else if (!c) {
        c = tt / *d;
    }
    if (*c * *d != tt) throw Error(ErrorCode::InvalidInput, "twist parameters must satisfy c d = t");
    if (nf_sign(*c) <= 0 || nf_sign(*d) <= 0) throw Error(ErrorCode::InvalidInput, "c and d must be positive");

    Vector x = kernel_vector(product, tt);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (nf_sign(x[i]) != 1) {
            throw Error(ErrorCode::InternalInconsistency,
                        "Perron eigenvector coordinate " + std::to_string(i + 1) + " is not positive");
        }
    }
    Vector eta = scale(c->inverse(), times(fm, x));
    return ThurstonDerived{sys, fn, fm, product, perron, field, tt, std::move(x), std::move(eta), *c, *d};
}

CylinderData cylinder_data(const ThurstonDerived& derived) {
    const auto& sys = derived.system;
    return CylinderData{derived.x, scale(derived.c.inverse(), diagonal_apply(sys.m, derived.x)),
                        scale(derived.d.inverse(), diagonal_apply(sys.n, derived.eta)), derived.eta, derived.c,
                        derived.d};
}

ParabolicPair parabolic_generators(const ThurstonDerived& derived) {
    const FieldElement zero(derived.field, Rational(0)), one(derived.field, Rational(1));
    return {Mat2(one, derived.c, zero, one), Mat2(one, zero, derived.d, one)};
}

Certificate symmetrization_check(const ThurstonDerived& derived) {
    std::vector<Rational> inverse_m;
    for (const Integer& v : derived.system.m) inverse_m.emplace_back(Rational(1) / Rational(v));
    const RatMatrix s = to_rational(derived.product) * RatMatrix::diagonal(inverse_m);
    if (!is_symmetric(s)) throw Error(ErrorCode::AsymmetryDetected, "product D_m^-1 is not symmetric");

    Certificate cert(Question::consistency);
    cert.add_flag("product_Dm_inverse_symmetric", true);
    const Polynomial chi = charpoly(derived.product);
    cert.add_polynomial("charpoly", chi);
    cert.add_count("charpoly", CountKind::degree);
    cert.add_polynomial("charpoly_square_free", square_free_part(chi));
    cert.add_count("charpoly_square_free", CountKind::real_roots);
    cert.add_count("charpoly_square_free", CountKind::degree);
    cert.outcome = derive_outcome(cert);
    cert.verdict = verdict_of(cert.question, cert.outcome);
    if (!cert.verdict) {
        throw Error(ErrorCode::InternalInconsistency, "a symmetric-similar matrix has non-real eigenvalues");
    }
    return cert;
}

Certificate totally_real_certificate(const ThurstonDerived& derived) {
    Certificate cert = is_totally_real_field(derived.field);
    cert.add_interval("t", derived.perron.isolation());
    if (!cert.verdict) {
        throw Error(ErrorCode::InternalInconsistency,
                    "trace field " + describe(derived.field) + " of a Thurston system is not totally real");
    }
    return cert;
}

Certificate check_decomposition(const CylinderData& data, const IntMatrix& E, const std::vector<Integer>& m,
                                const std::vector<Integer>& n) {
    const std::size_t r = E.rows(), s = E.cols();
    if (data.x.size() != r || data.y.size() != r || m.size() != r || data.xi.size() != s ||
        data.eta.size() != s || n.size() != s) {
        throw Error(ErrorCode::DimensionMismatch, "cylinder data does not match the shape of E");
    }
    Certificate cert(Question::consistency);
    cert.add_flag("x = E xi", equal(data.x, times(E, data.xi)));
    cert.add_flag("eta = tE y", equal(data.eta, times(transpose(E), data.y)));
    cert.add_flag("Dm x = c y", equal(diagonal_apply(m, data.x), scale(data.c, data.y)));
    cert.add_flag("Dn eta = d xi", equal(diagonal_apply(n, data.eta), scale(data.d, data.xi)));
    cert.outcome = derive_outcome(cert);
    cert.verdict = verdict_of(cert.question, cert.outcome);
    return cert;
}

Rational parabolic_from_moduli(const std::vector<Rational>& moduli) {
    if (moduli.empty()) throw Error(ErrorCode::InvalidInput, "no moduli given");
    Integer num_lcm(1), den_gcd(0);
    for (const Rational& mu : moduli) {
        if (mu <= 0) throw Error(ErrorCode::NonPositiveModulus, "modulus " + to_string(mu) + " is not positive");
        const Rational inv = 1 / mu;
        num_lcm = lcm(num_lcm, Integer(inv.get_num()));
        den_gcd = gcd(den_gcd, Integer(inv.get_den()));
    }
    return make_rational(num_lcm, den_gcd);
}

}  // namespace bouillabaisse
