#include "bouillabaisse/rational.hpp"

#include <cctype>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    return integer_from(text);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    return make_rational(integer_from(num), integer_from(den));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

namespace {

std::string render_scaled(const Integer& scaled, int digits) {
    const bool negative = scaled < 0;
    std::string body = Integer(abs(scaled)).get_str(10);
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits) {
            body.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(body.size())), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative ? "-" : "") + body;
}

Integer ten_pow(int digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
}

}  // namespace

std::string to_decimal_floor(const Rational& q, int digits) {
    Integer num = q.get_num() * ten_pow(digits);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    return render_scaled(out, digits);
}

std::string to_decimal_ceil(const Rational& q, int digits) {
    Integer num = q.get_num() * ten_pow(digits);
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    return render_scaled(out, digits);
}

}  // namespace bouillabaisse
