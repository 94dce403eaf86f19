#include "bouillabaisse/json_io.hpp"

#include "bouillabaisse/error.hpp"

namespace bouillabaisse {

namespace {

[[noreturn]] void malformed(const std::string& what, const Json& j) {
    throw Error(ErrorCode::ParseError, "expected " + what + ", got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("an object with \"") + key + "\"", j);
    return j.at(key);
}

Json vector_json(const std::vector<FieldElement>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_json(e));
    return out;
}

Json integers_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(e.get_str());
    return out;
}

std::vector<Integer> integers_from_json(const Json& j) {
    if (!j.is_array()) malformed("an array of integers", j);
    std::vector<Integer> out;
    for (const auto& e : j) out.push_back(integer_from_json(e));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    malformed("a rational as a decimal string", j);
}

Integer integer_from_json(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.dump());
    malformed("an integer as a decimal string", j);
}

Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
    return Json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const Json& j) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) malformed("a coefficient array", coeffs);
    std::vector<Rational> c;
    for (const auto& e : coeffs) c.push_back(rational_from_json(e));
    return Polynomial(std::move(c));
}

Json to_json(const Interval& range) { return Json::array({to_json(range.lo), to_json(range.hi)}); }

Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) malformed("an interval [\"lo\", \"hi\"]", j);
    const Rational lo = rational_from_json(j[0]), hi = rational_from_json(j[1]);
    if (lo > hi) throw Error(ErrorCode::ParseError, "interval with lo > hi: " + j.dump());
    return {lo, hi};
}

Json to_json(const AlgebraicReal& a) {
    return Json{{"defining", to_json(a.defining())}, {"isolation", to_json(a.isolation())}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
    return AlgebraicReal::from_isolation(polynomial_from_json(field(j, "defining")),
                                         interval_from_json(field(j, "isolation")));
}

Json to_json(const IntMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
        rows.push_back(row);
    }
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

IntMatrix int_matrix_from_json(const Json& j) {
    const Json& rows = j.is_array() ? j : field(j, "entries");
    if (!rows.is_array()) malformed("matrix rows", rows);
    std::vector<std::vector<Integer>> nested;
    for (const auto& row : rows) nested.push_back(integers_from_json(row));
    IntMatrix out = IntMatrix::from_rows(nested);
    if (j.is_object()) {
        if ((j.contains("rows") && j.at("rows").get<std::size_t>() != out.rows()) ||
            (j.contains("cols") && j.at("cols").get<std::size_t>() != out.cols())) {
            throw Error(ErrorCode::DimensionMismatch, "declared shape does not match the entries");
        }
    }
    return out;
}

Json to_json(const NumberField& k) {
    return Json{{"minpoly", to_json(k.minpoly())}, {"embedding", to_json(k.embedding())}};
}

NumberField field_from_json(const Json& j) {
    return NumberField::create(polynomial_from_json(field(j, "minpoly")), interval_from_json(field(j, "embedding")));
}

Json to_json(const FieldElement& u) { return Json{{"rep", to_json(u.rep())}}; }

FieldElement element_from_json(const NumberField& k, const Json& j) {
    if (j.is_object() && j.contains("rep")) return {k, polynomial_from_json(j.at("rep"))};
    return {k, polynomial_from_json(j.is_number_integer() ? Json(j.dump()) : j)};
}

Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m.a()), to_json(m.b())}), Json::array({to_json(m.c()), to_json(m.d())})});
}

Json to_json(const Certificate& cert) {
    Json polys = Json::object(), intervals = Json::object(), flags = Json::object(), counts = Json::array();
    for (const auto& [name, p] : cert.polynomials) polys[name] = to_json(p);
    for (const auto& c : cert.counts) {
        counts.push_back(Json{{"polynomial", c.polynomial}, {"kind", to_string(c.kind)}, {"value", c.value}});
    }
    for (const auto& [name, range] : cert.intervals) intervals[name] = to_json(range);
    for (const auto& [name, value] : cert.flags) flags[name] = value;
    return Json{{"question", to_string(cert.question)},
                {"outcome", to_string(cert.outcome)},
                {"verdict", cert.verdict},
                {"polynomials", polys},
                {"counts", counts},
                {"intervals", intervals},
                {"flags", flags},
                {"diagnostic", cert.diagnostic}};
}

Certificate certificate_from_json(const Json& j) {
    try {
        Certificate cert(parse_question(field(j, "question").get<std::string>()));
        cert.outcome = parse_outcome(field(j, "outcome").get<std::string>());
        cert.verdict = field(j, "verdict").get<bool>();
        for (const auto& [name, p] : field(j, "polynomials").items())
            cert.polynomials.emplace_back(name, polynomial_from_json(p));
        for (const auto& c : field(j, "counts")) {
            cert.counts.push_back({field(c, "polynomial").get<std::string>(),
                                   parse_count_kind(field(c, "kind").get<std::string>()),
                                   field(c, "value").get<int>()});
        }
        for (const auto& [name, range] : field(j, "intervals").items())
            cert.intervals.emplace_back(name, interval_from_json(range));
        for (const auto& [name, value] : field(j, "flags").items()) cert.flags.emplace_back(name, value.get<bool>());
        cert.diagnostic = field(j, "diagnostic").get<std::string>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
    }
}

Json to_json(const ThurstonSystem& sys) {
    Json out{{"E", to_json(sys.E)["entries"]}, {"m", integers_json(sys.m)}, {"n", integers_json(sys.n)}};
    if (sys.c) out["c"] = Json{{"rep", to_json(*sys.c)}};
    if (sys.d) out["d"] = Json{{"rep", to_json(*sys.d)}};
    return out;
}

ThurstonSystem system_from_json(const Json& j) {
    ThurstonSystem sys;
    sys.E = int_matrix_from_json(field(j, "E"));
    sys.m = integers_from_json(field(j, "m"));
    sys.n = integers_from_json(field(j, "n"));
    auto rep = [](const Json& e) {
        return polynomial_from_json(e.is_object() && e.contains("rep") ? e.at("rep") : e);
    };
    if (j.contains("c") && !j.at("c").is_null()) sys.c = rep(j.at("c"));
    if (j.contains("d") && !j.at("d").is_null()) sys.d = rep(j.at("d"));
    return sys;
}

Json to_json(const ThurstonDerived& d) {
    return Json{{"system", to_json(d.system)},
                {"Fn", to_json(d.Fn)},
                {"Fm", to_json(d.Fm)},
                {"product", to_json(d.product)},
                {"charpoly", to_json(charpoly(d.product))},
                {"t", to_json(d.perron.refine(make_rational(1, 1000000)))},
                {"field", to_json(d.field)},
                {"trace_field", describe(d.field)},
                {"degree", d.field.degree()},
                {"x", vector_json(d.x)},
                {"eta", vector_json(d.eta)},
                {"c", to_json(d.c)},
                {"d", to_json(d.d)}};
}

Json to_json(const CylinderData& data) {
    return Json{{"x", vector_json(data.x)},   {"y", vector_json(data.y)}, {"xi", vector_json(data.xi)},
                {"eta", vector_json(data.eta)}, {"c", to_json(data.c)},     {"d", to_json(data.d)}};
}

Json to_json(const AyReport& r) {
    Json factors = Json::array();
    for (const auto& f : r.factors)
        factors.push_back(Json{{"factor", to_json(f.factor)}, {"multiplicity", f.multiplicity}});
    return Json{{"n", r.n},
                {"P", to_pretty(r.P)},
                {"P_coeffs", to_json(r.P)},
                {"factors", factors},
                {"irreducible", r.irreducible},
                {"lambda", to_json(r.lambda)},
                {"real_roots", r.real_roots},
                {"expected_real_roots", r.expected_real_roots},
                {"Q", to_pretty(r.Q)},
                {"Q_coeffs", to_json(r.Q)},
                {"q_identity", r.q_identity},
                {"q_real_roots", r.q_real_roots},
                {"expected_q_real_roots", r.expected_q_real_roots},
                {"genus", r.genus},
                {"stratum", r.stratum},
                {"as_expected", r.as_expected()}};
}

}  // namespace bouillabaisse
