#pragma once

#include <nlohmann/json.hpp>

#include "bouillabaisse/certificate.hpp"
#include "bouillabaisse/matrix.hpp"
#include "bouillabaisse/number_field.hpp"
#include "bouillabaisse/sl2.hpp"
#include "bouillabaisse/thurston.hpp"
#include "bouillabaisse/veech.hpp"

namespace bouillabaisse {

using Json = nlohmann::ordered_json;

// Scalars are written as decimal strings ("-3", "7/2"). Readers also accept
// JSON integers. Malformed input throws ParseError.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

/// {"coeffs": ["c0", "c1", ...]}; the reader also accepts a text form.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// ["lo", "hi"]
Json to_json(const Interval& range);
Interval interval_from_json(const Json& j);

/// {"defining": polynomial, "isolation": interval}
Json to_json(const AlgebraicReal& a);
AlgebraicReal algebraic_from_json(const Json& j);

/// {"rows": r, "cols": s, "entries": [[...], ...]}; the reader also accepts
/// the bare nested rows.
Json to_json(const IntMatrix& a);
IntMatrix int_matrix_from_json(const Json& j);

/// {"minpoly": polynomial, "embedding": interval}
Json to_json(const NumberField& k);
NumberField field_from_json(const Json& j);

/// {"rep": polynomial}; the reader also accepts a bare polynomial or
/// rational in either form.
Json to_json(const FieldElement& u);
FieldElement element_from_json(const NumberField& k, const Json& j);

Json to_json(const Mat2& m);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// {"E": [[...]], "m": [...], "n": [...], "c"?: element, "d"?: element}
Json to_json(const ThurstonSystem& sys);
ThurstonSystem system_from_json(const Json& j);

Json to_json(const ThurstonDerived& derived);
Json to_json(const CylinderData& data);
Json to_json(const AyReport& report);

}  // namespace bouillabaisse
