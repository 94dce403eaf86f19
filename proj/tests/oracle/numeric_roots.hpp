#pragma once

// Floating-point companion-matrix root finder. Test oracle only: nothing in
// the library links against this, and no verdict is ever derived from it.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "bouillabaisse/polynomial.hpp"

namespace oracle {

inline std::vector<std::complex<double>> companion_roots(const bouillabaisse::Polynomial& p) {
    const int n = p.degree();
    if (n < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.leading().get_d();
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

struct RootCensus {
    int real = 0;          // counted with multiplicity
    int inside_disk = 0;   // |z| < 1
};

/// Classifies roots with a safety margin; nullopt when any root falls within
/// `margin` of a classification boundary (|Im z| ~ 0 ambiguity or |z| ~ 1).
inline std::optional<RootCensus> census(const bouillabaisse::Polynomial& p, double margin = 1e-6) {
    RootCensus c;
    for (const auto& z : companion_roots(p)) {
        const double im = std::abs(z.imag());
        if (im > margin && im < 1e-3) return std::nullopt;
        if (im <= margin) ++c.real;
        const double r = std::abs(z);
        if (std::abs(r - 1.0) < margin) return std::nullopt;
        if (r < 1.0) ++c.inside_disk;
    }
    return c;
}

}  // namespace oracle
