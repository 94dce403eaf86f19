#include "bouillabaisse/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

int factor_degree_cap() {
    if (const char* env = std::getenv("BOUILLABAISSE_FACTOR_DEGREE_CAP")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0 && value < 100000) {
            return static_cast<int>(value);
        }
    }
    return kDefaultFactorDegreeCap;
}

std::vector<Factor> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "square-free decomposition of the zero polynomial");
    }
    std::vector<Factor> out;
    if (p.degree() < 1) {
        return out;
    }
    // Yun's algorithm
    const Polynomial f = monic(p);
    const Polynomial df = derivative(f);
    const Polynomial b = gcd(f, df);
    Polynomial c = f / b;
    Polynomial d = df / b - derivative(c);
    for (unsigned i = 1; c.degree() > 0; ++i) {
        const Polynomial a = gcd(c, d);
        c = c / a;
        d = d / a - derivative(c);
        if (a.degree() > 0) out.push_back({monic(a), i});
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over Z/mZ, constant term first, coefficients in [0, m).

using Coeffs = std::vector<Integer>;

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs reduce(Coeffs a, const Integer& m) {
    for (auto& c : a) c = mod(c, m);
    trim(a);
    return a;
}

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs add(const Coeffs& a, const Coeffs& b, const Integer& m) {
    Coeffs out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return reduce(std::move(out), m);
}

Coeffs sub(const Coeffs& a, const Coeffs& b, const Integer& m) {
    Coeffs out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return reduce(std::move(out), m);
}

Coeffs mul(const Coeffs& a, const Coeffs& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return reduce(std::move(out), m);
}

Coeffs scale(const Coeffs& a, const Integer& c, const Integer& m) {
    Coeffs out(a);
    for (auto& v : out) v *= c;
    return reduce(std::move(out), m);
}

Integer inverse(const Integer& a, const Integer& m) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw Error(ErrorCode::InternalInconsistency, "non-invertible leading coefficient modulo " + to_string(m));
    }
    return inv;
}

/// Division by b whose leading coefficient is a unit mod m.
std::pair<Coeffs, Coeffs> divrem(const Coeffs& a, const Coeffs& b, const Integer& m) {
    Coeffs rem(a);
    if (deg(a) < deg(b)) return {{}, rem};
    const Integer lead_inv = inverse(b.back(), m);
    Coeffs quot(static_cast<std::size_t>(deg(a) - deg(b) + 1));
    for (int k = deg(a) - deg(b); k >= 0; --k) {
        const Integer factor = mod(rem[static_cast<std::size_t>(k + deg(b))] * lead_inv, m);
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= deg(b); ++j) {
            auto& slot = rem[static_cast<std::size_t>(k + j)];
            slot = mod(slot - factor * b[static_cast<std::size_t>(j)], m);
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(deg(b), 0)));
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Coeffs make_monic(const Coeffs& a, const Integer& p) {
    if (a.empty()) return a;
    return scale(a, inverse(a.back(), p), p);
}

Coeffs gcd_mod(Coeffs a, Coeffs b, const Integer& p) {
    while (!b.empty()) {
        Coeffs r = divrem(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// s*a + t*b = 1 (mod p) for coprime a, b.
std::pair<Coeffs, Coeffs> bezout_mod(const Coeffs& a, const Coeffs& b, const Integer& p) {
    Coeffs r0 = a, r1 = b;
    Coeffs s0{Integer(1)}, s1;
    Coeffs t0, t1{Integer(1)};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
        t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
    }
    if (deg(r0) != 0) {
        throw Error(ErrorCode::InternalInconsistency, "Hensel factors are not coprime modulo " + to_string(p));
    }
    const Integer inv = inverse(r0[0], p);
    return {scale(s0, inv, p), scale(t0, inv, p)};
}

Coeffs powmod(Coeffs base, Integer exponent, const Coeffs& f, const Integer& p) {
    Coeffs result{Integer(1)};
    base = divrem(base, f, p).second;
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t())) result = divrem(mul(result, base, p), f, p).second;
        exponent >>= 1;
        if (exponent > 0) base = divrem(mul(base, base, p), f, p).second;
    }
    return result;
}

Coeffs derivative_mod(const Coeffs& a, const Integer& p) {
    Coeffs out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<unsigned long>(i));
    return reduce(std::move(out), p);
}

// ---------------------------------------------------------------------------
// Factorization of a square-free monic polynomial over F_p, p odd.

std::vector<std::pair<Coeffs, int>> distinct_degree(Coeffs f, const Integer& p) {
    std::vector<std::pair<Coeffs, int>> out;
    const Coeffs x{Integer(0), Integer(1)};
    Coeffs h = x;
    for (int i = 1; 2 * i <= deg(f); ++i) {
        h = powmod(h, p, f, p);
        Coeffs g = gcd_mod(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, i);
            f = divrem(f, g, p).first;
            h = divrem(h, f, p).second;
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

void equal_degree(const Coeffs& g, int d, const Integer& p, std::mt19937_64& rng, std::vector<Coeffs>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer exponent;
    mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    std::uniform_int_distribution<unsigned long> coeff(0, p.get_ui() - 1);
    while (true) {
        Coeffs a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (deg(a) < 1) continue;
        Coeffs b = sub(powmod(a, exponent, g, p), Coeffs{Integer(1)}, p);
        Coeffs u = gcd_mod(b, g, p);
        if (deg(u) > 0 && deg(u) < deg(g)) {
            equal_degree(u, d, p, rng, out);
            equal_degree(divrem(g, u, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<Coeffs> factor_mod_p(const Coeffs& f, const Integer& p, std::mt19937_64& rng) {
    std::vector<Coeffs> out;
    for (const auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting.

struct HenselState {
    Coeffs g, h, s, t;
};

/// f = g h, s g + t h = 1 modulo m  ->  the same modulo m^2; h monic.
HenselState hensel_step(const Coeffs& f, const HenselState& in, const Integer& m) {
    const Integer m2 = m * m;
    const Coeffs e = sub(f, mul(in.g, in.h, m2), m2);
    auto [q, r] = divrem(mul(in.s, e, m2), in.h, m2);
    HenselState out;
    out.g = add(in.g, add(mul(in.t, e, m2), mul(q, in.g, m2), m2), m2);
    out.h = add(in.h, r, m2);
    const Coeffs b = sub(add(mul(in.s, out.g, m2), mul(in.t, out.h, m2), m2), Coeffs{Integer(1)}, m2);
    auto [c, d] = divrem(mul(in.s, b, m2), out.h, m2);
    out.s = sub(in.s, d, m2);
    out.t = sub(sub(in.t, mul(in.t, b, m2), m2), mul(c, out.g, m2), m2);
    return out;
}

Coeffs product_mod(const std::vector<Coeffs>& factors, std::size_t begin, std::size_t end, const Integer& m) {
    Coeffs acc{Integer(1)};
    for (std::size_t i = begin; i < end; ++i) acc = mul(acc, factors[i], m);
    return acc;
}

/// f monic modulo `target`, factors monic modulo p with product f mod p.
void lift_tree(const Coeffs& f, const std::vector<Coeffs>& factors, const Integer& p, const Integer& target,
               std::vector<Coeffs>& out) {
    if (factors.size() == 1) {
        out.push_back(reduce(f, target));
        return;
    }
    const std::size_t half = factors.size() / 2;
    const std::vector<Coeffs> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    const std::vector<Coeffs> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    HenselState state;
    state.g = product_mod(left, 0, left.size(), p);
    state.h = product_mod(right, 0, right.size(), p);
    std::tie(state.s, state.t) = bezout_mod(state.g, state.h, p);
    Integer m = p;
    while (m < target) {
        state = hensel_step(reduce(f, m * m), state, m);
        m *= m;
    }
    lift_tree(reduce(state.g, target), left, p, target, out);
    lift_tree(reduce(state.h, target), right, p, target, out);
}

// ---------------------------------------------------------------------------
// Factorization over Z of a primitive square-free polynomial.

Coeffs to_coeffs(const Polynomial& f) { return integer_coefficients(f); }

Polynomial from_symmetric(const Coeffs& a, const Integer& m) {
    const Integer half = m / 2;
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& c : a) out.emplace_back(c > half ? Integer(c - m) : c);
    return Polynomial(std::move(out));
}

bool good_prime(const Coeffs& f, const Integer& p) {
    if (mod(f.back(), p) == 0) return false;
    const Coeffs fp = make_monic(reduce(f, p), p);
    return deg(gcd_mod(fp, derivative_mod(fp, p), p)) == 0;
}

/// Candidate g (primitive over Z) divides f exactly over Z.
bool divides_over_z(const Polynomial& g, const Polynomial& f) {
    if (g.coeff(0) != 0 && !is_integer(f.coeff(0) / g.coeff(0))) return false;
    if (!is_integer(f.leading() / g.leading())) return false;
    const DivRem qr = divrem(f, g);
    return qr.remainder.is_zero() && qr.quotient.has_integer_coefficients();
}

/// Next subset of {0..n-1} of the same size in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Polynomial> factor_square_free_integer(Polynomial f) {
    if (f.degree() <= 1) return {f};
    const Coeffs fc = to_coeffs(f);

    // Among a handful of good primes keep the one with fewest modular factors.
    std::mt19937_64 rng(0x5eed + static_cast<unsigned>(f.degree()));
    Integer best_prime;
    std::vector<Coeffs> best_factors;
    int good_seen = 0;
    for (Integer p = 3; good_seen < 5; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (!good_prime(fc, p)) continue;
        ++good_seen;
        auto factors = factor_mod_p(make_monic(reduce(fc, p), p), p, rng);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_prime = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) return {f};

    // Coefficient bound for any factor scaled by the leading coefficient.
    Integer norm1(0);
    for (const auto& c : fc) norm1 += abs(c);
    const Integer lead = fc.back();
    const Integer bound = 2 * abs(lead) * norm1 * (Integer(1) << static_cast<unsigned long>(f.degree()));
    Integer modulus = best_prime;
    while (modulus <= bound) modulus *= best_prime;

    const Coeffs f_monic = scale(fc, inverse(lead, modulus), modulus);
    std::vector<Coeffs> lifted;
    lift_tree(f_monic, best_factors, best_prime, modulus, lifted);

    // Zassenhaus recombination.
    std::vector<Polynomial> found;
    std::size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool restarted = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        do {
            int total = 0;
            for (auto i : idx) total += deg(lifted[i]);
            if (2 * total > f.degree()) continue;
            Coeffs candidate{f.leading().get_num()};
            for (auto i : idx) candidate = mul(candidate, lifted[i], modulus);
            const Polynomial g = primitive_part(from_symmetric(candidate, modulus));
            if (!divides_over_z(g, f)) continue;
            found.push_back(g);
            f = f / g;
            for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
            restarted = true;
            break;
        } while (next_combination(idx, lifted.size()));
        if (!restarted) ++size;
    }
    if (f.degree() > 0) found.push_back(f);
    return found;
}

bool factor_less(const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coefficients();
    const auto& cb = b.factor.coefficients();
    for (std::size_t i = ca.size(); i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor_rational(const Polynomial& p, int degree_cap) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "factorization of the zero polynomial");
    }
    if (p.degree() > degree_cap) {
        throw Error(ErrorCode::DegreeTooLarge,
                    "degree " + std::to_string(p.degree()) + " exceeds the cap " + std::to_string(degree_cap));
    }
    std::vector<Factor> out;
    for (const auto& piece : square_free_decomposition(p)) {
        for (const auto& g : factor_square_free_integer(primitive_part(piece.factor))) {
            out.push_back({monic(g), piece.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

bool is_irreducible(const Polynomial& p, int degree_cap) {
    if (p.degree() < 1) return false;
    const auto factors = factor_rational(p, degree_cap);
    return factors.size() == 1 && factors.front().multiplicity == 1;
}

}  // namespace bouillabaisse
