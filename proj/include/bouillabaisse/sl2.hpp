#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bouillabaisse/number_field.hpp"

namespace bouillabaisse {

/// [[a, b], [c, d]] over a number field with ad - bc = 1.
class Mat2 {
public:
    /// Throws FieldMismatch or NotUnimodular.
    Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
    static Mat2 identity(const NumberField& field);

    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }
    const FieldElement& c() const noexcept { return c_; }
    const FieldElement& d() const noexcept { return d_; }
    const NumberField& field() const noexcept { return a_.field(); }

    FieldElement trace() const { return a_ + d_; }
    FieldElement determinant() const { return a_ * d_ - b_ * c_; }
    Mat2 inverse() const { return {d_, -b_, -c_, a_}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y);
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

private:
    FieldElement a_, b_, c_, d_;
};

enum class Letter { h, v, h_inverse, v_inverse };

/// Letters over {h, v, H, V}, capitals inverse. Whitespace is ignored;
/// anything else throws ParseError.
std::vector<Letter> parse_word(std::string_view word);
std::string to_string(const std::vector<Letter>& word);

/// Product of the letters left to right, with h -> ph and v -> pv. The
/// empty word evaluates to the identity.
Mat2 evaluate_word(const std::vector<Letter>& word, const Mat2& ph, const Mat2& pv);
Mat2 evaluate_word(std::string_view word, const Mat2& ph, const Mat2& pv);

enum class ElementClass { identity, minus_identity, elliptic, parabolic, hyperbolic };

std::string_view to_string(ElementClass k) noexcept;

/// By the sign of trace^2 - 4 under the field's embedding; on the boundary,
/// +-identity is told apart from a genuine parabolic entrywise.
ElementClass classify(const Mat2& m);

}  // namespace bouillabaisse
