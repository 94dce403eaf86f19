#include "bouillabaisse/real_roots.hpp"

#include <algorithm>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) {
        throw Error(ErrorCode::InvalidInput, "interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
    }
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval evaluate(const Polynomial& p, const Interval& range) {
    Interval acc = Interval::point(Rational(0));
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * range + *it;
    }
    return acc;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "Sturm sequence of the zero polynomial");
    }
    Polynomial a = primitive_part(square_free_part(p));
    chain_.push_back(a);
    if (a.degree() == 0) {
        return;
    }
    Polynomial b = primitive_part(derivative(a));
    while (!b.is_zero()) {
        chain_.push_back(b);
        Polynomial r = primitive_part(-(a % b));
        a = std::move(b);
        b = std::move(r);
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(q(x)));
    return sign_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sign(q.leading()));
    return sign_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        const int s = sign(q.leading());
        signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return sign_variations(signs);
}

int SturmSequence::count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

int SturmSequence::count_in(const Interval& range) const {
    const int at_lo = square_free()(range.lo) == 0 ? 1 : 0;
    if (range.lo == range.hi) {
        return at_lo;
    }
    return variations_at(range.lo) - variations_at(range.hi) + at_lo;
}

int SturmSequence::count_above(const Rational& x) const {
    return variations_at(x) - variations_at_plus_infinity();
}

int count_real_roots(const Polynomial& p) { return SturmSequence(p).count_all(); }

int count_real_roots(const Polynomial& p, const Interval& range) { return SturmSequence(p).count_in(range); }

int count_real_roots_above(const Polynomial& p, const Rational& x) { return SturmSequence(p).count_above(x); }

Rational cauchy_bound(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "Cauchy bound of the zero polynomial");
    }
    Rational best(0);
    const Rational& lead = p.leading();
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        best = std::max(best, Rational(abs(c[i] / lead)));
    }
    return 1 + best;
}

AlgebraicReal AlgebraicReal::from_isolation(const Polynomial& p, const Interval& isolation) {
    Polynomial sf = square_free_part(p);
    if (count_real_roots(sf, isolation) != 1) {
        throw Error(ErrorCode::InvalidInput, "interval [" + to_string(isolation.lo) + ", " + to_string(isolation.hi) +
                                                 "] does not isolate exactly one root of " + to_pretty(p));
    }
    if (isolation.lo != isolation.hi && sf(isolation.lo) == 0) {
        return {std::move(sf), Interval::point(isolation.lo)};
    }
    if (isolation.lo != isolation.hi && sf(isolation.hi) == 0) {
        return {std::move(sf), Interval::point(isolation.hi)};
    }
    return {std::move(sf), isolation};
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    return {Polynomial(std::vector<Rational>{-q, Rational(1)}), Interval::point(q)};
}

namespace {

/// Refinement state for one root of a square-free polynomial whose sign
/// differs strictly at the two ends of [lo, hi].
class Refiner {
public:
    Refiner(const Polynomial& p, Interval range) : p_(p), lo_(range.lo), hi_(range.hi) {
        if (lo_ != hi_) sign_lo_ = sign(p_(lo_));
    }

    Interval run(const Rational& width) {
        Integer subdivisions(4);
        while (hi_ - lo_ > width) {
            if (!quadratic_step(subdivisions)) {
                bisect();
                if (subdivisions > 4) subdivisions = sqrt(subdivisions);
            } else {
                subdivisions *= subdivisions;
            }
        }
        return {lo_, hi_};
    }

    void bisect() {
        const Rational mid = (lo_ + hi_) / 2;
        const int s = sign(p_(mid));
        if (s == 0) {
            pin(mid);
        } else if (s == sign_lo_) {
            lo_ = mid;
        } else {
            hi_ = mid;
        }
    }

    // Secant guess snapped to a grid of `n` cells; succeeds when the root is
    // confirmed inside one cell.
    bool quadratic_step(const Integer& n) {
        const Rational width = hi_ - lo_;
        const Rational f_lo = p_(lo_);
        const Rational f_hi = p_(hi_);
        const Rational secant = f_lo / (f_lo - f_hi) * n;
        Integer k;
        const Rational shifted = secant + Rational(1, 2);
        mpz_fdiv_q(k.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        k = std::clamp(k, Integer(0), n);
        auto grid = [&](const Integer& j) -> Rational { return lo_ + width * Rational(j) / Rational(n); };
        auto sign_at = [&](const Rational& x) { return sign(p_(x)); };

        if (k == 0) {
            const Rational g = grid(1);
            const int s = sign_at(g);
            if (s == 0) return pin(g), true;
            if (s != sign_lo_) return narrow(lo_, g), true;
            return false;
        }
        if (k == n) {
            const Rational g = grid(n - 1);
            const int s = sign_at(g);
            if (s == 0) return pin(g), true;
            if (s == sign_lo_) return narrow(g, hi_), true;
            return false;
        }
        const Rational g = grid(k);
        const int s = sign_at(g);
        if (s == 0) return pin(g), true;
        if (s == sign_lo_) {
            if (k + 1 == n) return narrow(g, hi_), true;
            const Rational next = grid(k + 1);
            const int sn = sign_at(next);
            if (sn == 0) return pin(next), true;
            if (sn != sign_lo_) return narrow(g, next), true;
            return false;
        }
        if (k == 1) return narrow(lo_, g), true;
        const Rational prev = grid(k - 1);
        const int sp = sign_at(prev);
        if (sp == 0) return pin(prev), true;
        if (sp == sign_lo_) return narrow(prev, g), true;
        return false;
    }

    Interval interval() const { return {lo_, hi_}; }

private:
    void pin(const Rational& root) { lo_ = hi_ = root; }
    void narrow(const Rational& lo, const Rational& hi) {
        lo_ = lo;
        hi_ = hi;
    }

    const Polynomial& p_;
    Rational lo_;
    Rational hi_;
    int sign_lo_ = 0;
};

}  // namespace

AlgebraicReal AlgebraicReal::refine(const Rational& width) const {
    if (width <= 0) {
        throw Error(ErrorCode::InvalidInput, "refinement width must be positive");
    }
    if (is_rational()) {
        return *this;
    }
    return {defining_, Refiner(defining_, isolation_).run(width)};
}

int AlgebraicReal::compare(const Rational& q) const {
    if (defining_(q) == 0 && isolation_.contains(q)) {
        return 0;
    }
    AlgebraicReal current = *this;
    Rational width = isolation_.width() / 2;
    while (current.isolation_.contains(q)) {
        current = current.refine(width);
        width /= 2;
    }
    return current.isolation_.lo > q ? 1 : -1;
}

double AlgebraicReal::approximate() const {
    const AlgebraicReal fine = refine(Rational(1, Integer(1) << 60));
    return Rational((fine.isolation_.lo + fine.isolation_.hi) / 2).get_d();
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    const Rational lo = std::max(a.isolation_.lo, b.isolation_.lo);
    const Rational hi = std::min(a.isolation_.hi, b.isolation_.hi);
    if (hi < lo) {
        return false;
    }
    const Polynomial common = gcd(a.defining_, b.defining_);
    if (common.degree() < 1) {
        return false;
    }
    return count_real_roots(common, Interval(lo, hi)) == 1;
}

std::vector<AlgebraicReal> isolate_real_roots(const Polynomial& p) {
    const SturmSequence sturm(p);
    const Polynomial sf = monic(sturm.square_free());
    std::vector<AlgebraicReal> roots;
    if (sf.degree() < 1) {
        return roots;
    }
    const Rational bound = cauchy_bound(sf);

    // Open cells (a, b) whose endpoints are never roots.
    struct Cell {
        Rational a, b;
        int count;
    };
    std::vector<Cell> stack{{-bound, bound, sturm.count_all()}};
    const int candidates = sf.degree() + 2;
    while (!stack.empty()) {
        Cell cell = std::move(stack.back());
        stack.pop_back();
        if (cell.count == 0) continue;
        if (cell.count == 1) {
            roots.push_back(AlgebraicReal(sf, Interval(cell.a, cell.b)));
            continue;
        }
        Rational split = (cell.a + cell.b) / 2;
        for (int k = 1; sf(split) == 0; ++k) {
            split = cell.a + (cell.b - cell.a) * Rational(k, candidates + 1);
        }
        const int left = sturm.variations_at(cell.a) - sturm.variations_at(split);
        stack.push_back({split, cell.b, cell.count - left});
        stack.push_back({cell.a, split, left});
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.isolation().lo < y.isolation().lo; });

    // Neighbouring cells may share an endpoint; shrink until strictly apart.
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        while (roots[i].isolation().hi >= roots[i + 1].isolation().lo) {
            Refiner refiner(sf, roots[i].isolation());
            refiner.bisect();
            roots[i] = AlgebraicReal(sf, refiner.interval());
        }
    }
    return roots;
}

}  // namespace bouillabaisse
