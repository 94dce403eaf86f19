#include "bouillabaisse/sl2.hpp"

#include <array>
#include <cctype>

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

Mat2::Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require_same_field(a_, b_);
    require_same_field(a_, c_);
    require_same_field(a_, d_);
    if (determinant() != Rational(1)) {
        throw Error(ErrorCode::NotUnimodular, "determinant is " + to_pretty(determinant().rep()) + ", not 1");
    }
}

Mat2 Mat2::identity(const NumberField& field) {
    const FieldElement zero(field, Rational(0)), one(field, Rational(1));
    return {one, zero, zero, one};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
            x.c_ * y.b_ + x.d_ * y.d_};
}

bool operator==(const Mat2& x, const Mat2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::vector<Letter> parse_word(std::string_view word) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        switch (word[i]) {
            case 'h': out.push_back(Letter::h); break;
            case 'v': out.push_back(Letter::v); break;
            case 'H': out.push_back(Letter::h_inverse); break;
            case 'V': out.push_back(Letter::v_inverse); break;
            default:
                if (std::isspace(static_cast<unsigned char>(word[i]))) break;
                throw Error(ErrorCode::ParseError, "unexpected letter '" + std::string(1, word[i]) + "' at offset " +
                                                       std::to_string(i) + " (expected h, v, H or V)");
        }
    }
    return out;
}

std::string to_string(const std::vector<Letter>& word) {
    static constexpr std::array kLetters{'h', 'v', 'H', 'V'};
    std::string out;
    for (Letter l : word) out += kLetters[static_cast<std::size_t>(l)];
    return out;
}

Mat2 evaluate_word(const std::vector<Letter>& word, const Mat2& ph, const Mat2& pv) {
    require_same_field(ph.a(), pv.a());
    const std::array generators{ph, pv, ph.inverse(), pv.inverse()};
    Mat2 out = Mat2::identity(ph.field());
    for (Letter l : word) out = out * generators[static_cast<std::size_t>(l)];
    return out;
}

Mat2 evaluate_word(std::string_view word, const Mat2& ph, const Mat2& pv) {
    return evaluate_word(parse_word(word), ph, pv);
}

std::string_view to_string(ElementClass k) noexcept {
    static constexpr std::array kNames{"identity", "minus_identity", "elliptic", "parabolic", "hyperbolic"};
    return kNames[static_cast<std::size_t>(k)];
}

ElementClass classify(const Mat2& m) {
    const FieldElement tr = m.trace();
    const int s = nf_sign(tr * tr - FieldElement(m.field(), Rational(4)));
    if (s > 0) return ElementClass::hyperbolic;
    if (s < 0) return ElementClass::elliptic;
    const Mat2 one = Mat2::identity(m.field());
    if (m == one) return ElementClass::identity;
    if (m == Mat2(-one.a(), one.b(), one.c(), -one.d())) return ElementClass::minus_identity;
    return ElementClass::parabolic;
}

}  // namespace bouillabaisse
