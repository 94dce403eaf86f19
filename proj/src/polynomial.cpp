#include "bouillabaisse/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (long c : coeffs) {
        out.emplace_back(c);
    }
    return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::InvalidInput, "leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](const Rational& c) { return Rational(-c); });
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) {
        return {};
    }
    std::vector<Rational> out(p.coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

DivRem divrem(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    std::vector<Rational> rem(p.coefficients());
    const int dq = q.degree();
    if (p.degree() < dq) {
        return {Polynomial(), p};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
    const Rational& lead = q.leading();
    const auto& qc = q.coefficients();
    for (int k = p.degree() - dq; k >= 0; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k + dq)] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= dq; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * qc[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dq));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& p, const Polynomial& q) { return divrem(p, q).quotient; }
Polynomial operator%(const Polynomial& p, const Polynomial& q) { return divrem(p, q).remainder; }

Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    }
    return Polynomial(std::move(out));
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    return Rational(1 / p.leading()) * p;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * q + Polynomial::constant(*it);
    }
    return acc;
}

Polynomial reciprocal(const Polynomial& p) {
    std::vector<Rational> out(p.coefficients().rbegin(), p.coefficients().rend());
    return Polynomial(std::move(out));
}

Rational content(const Polynomial& p) {
    if (p.is_zero()) {
        return Rational(0);
    }
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& c : p.coefficients()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    return make_rational(num_gcd, den_lcm);
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    return Rational(1 / content(p)) * p;
}

std::vector<Integer> integer_coefficients(const Polynomial& p) {
    std::vector<Integer> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (!is_integer(c)) {
            throw Error(ErrorCode::InvalidInput, "polynomial has non-integer coefficient " + to_string(c));
        }
        out.push_back(c.get_num());
    }
    return out;
}

std::pair<std::size_t, Polynomial> split_power_of_x(const Polynomial& p) {
    const auto& c = p.coefficients();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    return {k, Polynomial(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial a = primitive_part(p);
    Polynomial b = primitive_part(q);
    while (!b.is_zero()) {
        Polynomial r = primitive_part(a % b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial r0 = p, r1 = q;
    Polynomial s0 = Polynomial::constant(Rational(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [quot, rem] = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quot * s1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    if (r0.is_zero()) {
        return {};
    }
    const Rational scale = 1 / r0.leading();
    return {scale * r0, scale * s0, scale * t0};
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidInput, "square-free part of the zero polynomial");
    }
    if (p.degree() == 0) {
        return Polynomial::constant(Rational(1));
    }
    return monic(p / gcd(p, derivative(p)));
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += to_string(c[i]);
        if (i >= 1) out += "*X";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string to_pretty(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        const Rational& coeff = c[k];
        if (coeff == 0) continue;
        const Rational magnitude = abs(coeff);
        if (coeff < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += "X";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) {
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
        }
    }

    Polynomial parse() {
        if (src_.empty()) fail("empty polynomial");
        std::vector<Rational> coeffs;
        bool first = true;
        while (pos_ < src_.size()) {
            int sign = 1;
            if (!first && peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            // "c0 + -1*X" is canonical output, so a sign may follow a '+'.
            int signs_read = 0;
            while (peek() == '+' || peek() == '-') {
                if (++signs_read > 2) fail("too many signs");
                if (get() == '-') sign = -sign;
            }
            first = false;
            auto [coeff, power] = term();
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += sign * coeff;
        }
        return Polynomial(std::move(coeffs));
    }

private:
    std::pair<Rational, std::size_t> term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            if (peek() == '*') {
                get();
                if (!is_var(peek())) fail("expected X after '*'");
            }
        }
        if (!is_var(peek())) {
            if (!have_coeff) fail("expected a coefficient or X");
            return {coeff, 0};
        }
        get();
        std::size_t power = 1;
        if (peek() == '^') {
            get();
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) get();
            if (start == pos_) fail("expected exponent after '^'");
            const auto digits = src_.substr(start, pos_ - start);
            if (digits.size() > 6) fail("exponent too large");
            power = std::stoul(digits);
        }
        return {coeff, power};
    }

    Rational number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (peek() == '/') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            while (std::isdigit(static_cast<unsigned char>(peek()))) get();
        }
        return parse_rational(std::string_view(src_).substr(start, pos_ - start));
    }

    static bool is_var(char ch) { return ch == 'X' || ch == 'x'; }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() { return src_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace bouillabaisse
