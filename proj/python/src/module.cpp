#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bouillabaisse/cli.hpp"
#include "bouillabaisse/unit_disk.hpp"

namespace py = pybind11;
using namespace bouillabaisse;

namespace {

std::string dump(const Json& j) { return j.dump(); }

AlgebraicReal root_of(const Polynomial& p, const std::optional<std::pair<std::string, std::string>>& lambda) {
    if (lambda) return AlgebraicReal::from_isolation(p, {parse_rational(lambda->first), parse_rational(lambda->second)});
    const auto roots = isolate_real_roots(p);
    if (roots.empty()) throw Error(ErrorCode::InvalidInput, to_pretty(p) + " has no real root");
    return roots.back();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic kernels behind the bouillabaisse package; results cross as JSON text.";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("count_real_roots", [](const std::string& p) { return count_real_roots(parse_polynomial(p)); });
    m.def("count_roots_in_unit_disk", [](const std::string& p) { return count_roots_in_unit_disk(parse_polynomial(p)); });
    m.def("factor", [](const std::string& p) {
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& f : factor_rational(parse_polynomial(p))) out.emplace_back(to_pretty(f.factor), f.multiplicity);
        return out;
    });
    m.def("isolate_real_roots", [](const std::string& p) {
        Json out = Json::array();
        for (const auto& a : isolate_real_roots(parse_polynomial(p))) out.push_back(to_json(a));
        return dump(out);
    });

    m.def("construct", [](const std::string& system) {
        const ThurstonDerived d = build(system_from_json(Json::parse(system)));
        const auto [ph, pv] = parabolic_generators(d);
        Json out = to_json(d);
        out["Ph"] = to_json(ph);
        out["Pv"] = to_json(pv);
        out["trace_PhPv"] = to_json((ph * pv).trace());
        out["symmetrization"] = to_json(symmetrization_check(d));
        out["totally_real"] = to_json(totally_real_certificate(d));
        return dump(out);
    });
    m.def(
        "trace_plus_inverse_minpoly",
        [](const std::string& p, std::optional<std::pair<std::string, std::string>> lambda) {
            const Polynomial poly = parse_polynomial(p);
            return to_pretty(trace_plus_inverse_minpoly(poly, root_of(poly, lambda)));
        },
        py::arg("p"), py::arg("lam") = py::none());
    m.def("pisot_check", [](const std::string& p) { return dump(to_json(pisot_check(parse_polynomial(p)))); });
    m.def("pisot_lemma_check",
          [](const std::string& p) { return dump(to_json(pisot_lemma_check(parse_polynomial(p)))); });
    m.def(
        "no_parabolic_certificate",
        [](const std::string& p, std::optional<std::pair<std::string, std::string>> lambda) {
            const Polynomial poly = parse_polynomial(p);
            return dump(to_json(no_parabolic_certificate(poly, root_of(poly, lambda))));
        },
        py::arg("p"), py::arg("lam") = py::none());
    m.def("ay_report", [](int n) {
        const AyReport r = ay_report(n);
        Json out = to_json(r);
        out["pisot"] = to_json(r.pisot);
        out["pisot_lemma"] = to_json(r.pisot_lemma);
        out["no_parabolic"] = to_json(r.no_parabolic);
        return dump(out);
    });
    m.def("recheck", [](const std::string& cert) { return recheck(certificate_from_json(Json::parse(cert))); });
    m.def("run", [](std::vector<std::string> argv) {
        argv.insert(argv.begin(), "bouillabaisse");
        py::gil_scoped_release release;
        const auto r = cli::run(argv);
        return std::make_tuple(r.exit_code, r.out, r.err);
    });
}
