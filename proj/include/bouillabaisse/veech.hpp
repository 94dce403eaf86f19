#pragma once

#include <string>
#include <vector>

#include "bouillabaisse/certificate.hpp"
#include "bouillabaisse/factor.hpp"
#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/real_roots.hpp"

namespace bouillabaisse {

/// Is the real root > 1 of p a Pisot number? p must be monic with integer
/// coefficients (NotMonicInteger) and irreducible (NotIrreducible). A root on
/// the unit circle gives not_pisot with a BoundaryRoot diagnostic.
Certificate pisot_check(const Polynomial& p);

/// For a Pisot beta with Q[beta] not totally real, checks that
/// Q[beta + 1/beta] is not totally real either. Inputs outside that
/// hypothesis yield not_applicable; a totally real conclusion throws
/// InternalInconsistency.
Certificate pisot_lemma_check(const Polynomial& p);

/// If Q[lambda + 1/lambda] is not totally real, no group containing a
/// pseudo-Anosov with expansion factor lambda has parabolic elements;
/// otherwise the outcome is inconclusive. lambda must be a root of p with
/// lambda > 1 (LambdaNotGreaterThanOne); p monic, integral and irreducible.
Certificate no_parabolic_certificate(const Polynomial& p, const AlgebraicReal& lambda);

/// X^n - X^(n-1) - ... - X - 1 for n >= 2 (NOutOfRange).
Polynomial ay_polynomial(int n);

struct AyReport {
    int n = 0;
    Polynomial P;
    std::vector<Factor> factors;
    bool irreducible = false;
    AlgebraicReal lambda;  // refined to width <= 10^-6
    int real_roots = 0;
    int expected_real_roots = 0;  // 1 for odd n, 2 for even n
    Polynomial Q;                 // (X - 1) P
    bool q_identity = false;      // Q = X^(n+1) - 2 X^n + 1
    int q_real_roots = 0;
    int expected_q_real_roots = 0;
    Certificate pisot;
    Certificate pisot_lemma;
    Certificate no_parabolic;
    int genus = 0;        // annotation only
    std::string stratum;  // annotation only

    /// Every check came out as expected.
    bool as_expected() const;
};

/// The full analysis of the n-th member of the family, n >= 3 (NOutOfRange).
/// A reducible P throws InternalInconsistency.
AyReport ay_report(int n);

}  // namespace bouillabaisse
