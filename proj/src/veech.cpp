#include "bouillabaisse/veech.hpp"

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/number_field.hpp"

namespace bouillabaisse {

namespace {

const Rational kLambdaWidth(1, 1000000);

void require_monic_integer(const Polynomial& p) {
    if (p.degree() < 1 || !p.is_monic() || !p.has_integer_coefficients()) {
        throw Error(ErrorCode::NotMonicInteger, to_pretty(p) + " is not a monic integer polynomial");
    }
}

void require_irreducible(const Polynomial& p) {
    if (!is_irreducible(p)) throw Error(ErrorCode::NotIrreducible, to_pretty(p) + " is reducible over Q");
}

void record_pisot_counts(Certificate& cert, const std::string& name) {
    cert.add_count(name, CountKind::real_roots_above_one);
    if (cert.add_count(name, CountKind::unit_disk) < 0) {
        cert.diagnostic = "BoundaryRoot: " + to_pretty(cert.polynomial(name)) + " has a root on the unit circle";
    }
    cert.add_count(name, CountKind::degree);
}

void finish(Certificate& cert) {
    cert.outcome = derive_outcome(cert);
    cert.verdict = verdict_of(cert.question, cert.outcome);
}

Certificate not_applicable(Certificate cert, const std::string& why) {
    cert.outcome = Outcome::not_applicable;
    cert.verdict = false;
    cert.diagnostic = "PreconditionFailed: " + why;
    return cert;
}

}  // namespace

Certificate pisot_check(const Polynomial& p) {
    require_monic_integer(p);
    require_irreducible(p);
    Certificate cert(Question::pisot);
    cert.add_polynomial("p", p);
    record_pisot_counts(cert, "p");
    const auto roots = isolate_real_roots(p);
    if (!roots.empty() && roots.back().compare(Rational(1)) > 0) {
        cert.add_interval("beta", roots.back().refine(kLambdaWidth).isolation());
    }
    finish(cert);
    return cert;
}

Certificate pisot_lemma_check(const Polynomial& p) {
    Certificate cert(Question::pisot_lemma);
    if (p.degree() < 1 || !p.is_monic() || !p.has_integer_coefficients()) {
        return not_applicable(cert, to_pretty(p) + " is not a monic integer polynomial");
    }
    if (!is_irreducible(p)) return not_applicable(cert, to_pretty(p) + " is reducible over Q");

    cert.add_polynomial("beta", p);
    record_pisot_counts(cert, "beta");
    const int real = cert.add_count("beta", CountKind::real_roots);
    const int degree = *cert.count("beta", CountKind::degree);
    if (cert.count("beta", CountKind::real_roots_above_one) != 1 ||
        cert.count("beta", CountKind::unit_disk) != degree - 1) {
        return not_applicable(cert, "the root of " + to_pretty(p) + " is not a Pisot number");
    }
    if (real == degree) return not_applicable(cert, "Q[beta] is totally real");

    const AlgebraicReal beta = isolate_real_roots(p).back();
    const AlgebraicReal image = trace_plus_inverse(p, beta);
    cert.add_interval("beta", beta.refine(kLambdaWidth).isolation());
    cert.add_interval("beta + 1/beta", image.refine(kLambdaWidth).isolation());
    cert.add_polynomial("trace_minpoly", image.defining());
    cert.add_count("trace_minpoly", CountKind::real_roots);
    cert.add_count("trace_minpoly", CountKind::degree);
    finish(cert);
    if (cert.outcome != Outcome::not_totally_real) {
        throw Error(ErrorCode::InternalInconsistency,
                    "Q[beta + 1/beta] is totally real for the Pisot root of " + to_pretty(p));
    }
    return cert;
}

Certificate no_parabolic_certificate(const Polynomial& p, const AlgebraicReal& lambda) {
    require_monic_integer(p);
    require_irreducible(p);
    if (lambda.compare(Rational(1)) <= 0) {
        throw Error(ErrorCode::LambdaNotGreaterThanOne, "the designated root of " + to_pretty(p) + " is not > 1");
    }
    const AlgebraicReal image = trace_plus_inverse(p, lambda);
    Certificate cert(Question::no_parabolic);
    cert.add_polynomial("p", p);
    cert.add_interval("lambda", lambda.refine(kLambdaWidth).isolation());
    cert.add_interval("lambda + 1/lambda", image.refine(kLambdaWidth).isolation());
    cert.add_polynomial("trace_minpoly", image.defining());
    cert.add_count("trace_minpoly", CountKind::real_roots);
    cert.add_count("trace_minpoly", CountKind::degree);
    finish(cert);
    return cert;
}

Polynomial ay_polynomial(int n) {
    if (n < 2) throw Error(ErrorCode::NOutOfRange, "n = " + std::to_string(n) + " (need n >= 2)");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(-1));
    c.back() = 1;
    return Polynomial(std::move(c));
}

bool AyReport::as_expected() const {
    return irreducible && real_roots == expected_real_roots && q_identity && q_real_roots == expected_q_real_roots &&
           pisot.verdict && pisot_lemma.verdict && no_parabolic.outcome == Outcome::no_parabolic;
}

AyReport ay_report(int n) {
    if (n < 3) throw Error(ErrorCode::NOutOfRange, "n = " + std::to_string(n) + " (need n >= 3)");
    AyReport r;
    r.n = n;
    r.P = ay_polynomial(n);
    r.factors = factor_rational(r.P);
    r.irreducible = r.factors.size() == 1 && r.factors.front().multiplicity == 1;
    if (!r.irreducible) throw Error(ErrorCode::InternalInconsistency, to_pretty(r.P) + " factors over Q");

    const auto roots = isolate_real_roots(r.P);
    r.lambda = roots.back().refine(kLambdaWidth);
    r.real_roots = static_cast<int>(roots.size());
    r.expected_real_roots = n % 2 == 0 ? 2 : 1;

    r.Q = Polynomial::from_ints({-1, 1}) * r.P;
    r.q_identity = r.Q == Polynomial::monomial(Rational(1), static_cast<std::size_t>(n) + 1) -
                              Polynomial::monomial(Rational(2), static_cast<std::size_t>(n)) +
                              Polynomial::constant(Rational(1));
    r.q_real_roots = count_real_roots(r.Q);
    r.expected_q_real_roots = r.expected_real_roots + 1;

    r.pisot = pisot_check(r.P);
    r.pisot_lemma = pisot_lemma_check(r.P);
    r.no_parabolic = no_parabolic_certificate(r.P, r.lambda);
    r.genus = n;
    r.stratum = "H(" + std::to_string(n - 1) + "," + std::to_string(n - 1) + ")";
    return r;
}

}  // namespace bouillabaisse
