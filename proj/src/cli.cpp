#include "bouillabaisse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace bouillabaisse::cli {

namespace {

const Rational kDisplayWidth(1, 1000000);

// ---------------------------------------------------------------- input

Json load_input(const std::string& input) {
    const auto first = input.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) {
        text = input;
    } else if (input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(input);
        if (!file) throw Error(ErrorCode::InvalidInput, "cannot read '" + input + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

Polynomial load_polynomial(const std::string& poly, const std::string& input) {
    if (!poly.empty() && !input.empty()) throw Error(ErrorCode::InvalidInput, "give either --poly or --input");
    if (!poly.empty()) return parse_polynomial(poly);
    if (!input.empty()) {
        const Json j = load_input(input);
        return polynomial_from_json(j.is_object() && j.contains("p") ? j.at("p") : j);
    }
    throw Error(ErrorCode::InvalidInput, "a polynomial is required (--poly or --input)");
}

/// The root of p in "lo,hi", or the largest real root.
AlgebraicReal choose_root(const Polynomial& p, const std::string& range) {
    if (range.empty()) {
        const auto roots = isolate_real_roots(p);
        if (roots.empty()) throw Error(ErrorCode::InvalidInput, to_pretty(p) + " has no real root");
        return roots.back();
    }
    const auto comma = range.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected --lambda lo,hi");
    const Rational lo = parse_rational(range.substr(0, comma)), hi = parse_rational(range.substr(comma + 1));
    if (lo > hi) throw Error(ErrorCode::InvalidInput, "--lambda interval has lo > hi");
    return AlgebraicReal::from_isolation(p, Interval(lo, hi));
}

Json algebraic_display(const AlgebraicReal& a) { return to_json(a.refine(kDisplayWidth)); }

// ---------------------------------------------------------------- commands

struct Outcome {
    Report report;
    int exit_code = 0;
};

Outcome construct(const std::string& input, const std::string& word) {
    const ThurstonSystem sys = system_from_json(load_input(input));
    const ThurstonDerived d = build(sys);
    const auto [ph, pv] = parabolic_generators(d);
    const Mat2 hv = ph * pv;

    Report r{"construct", {}, to_json(d)};
    r.data["Ph"] = to_json(ph);
    r.data["Pv"] = to_json(pv);
    r.data["trace_PhPv"] = to_json(hv.trace());
    r.data["class_PhPv"] = std::string(to_string(classify(hv)));
    if (!word.empty()) {
        const Mat2 w = evaluate_word(word, ph, pv);
        r.data["word"] = Json{{"word", to_string(parse_word(word))},
                              {"matrix", to_json(w)},
                              {"trace", to_json(w.trace())},
                              {"class", std::string(to_string(classify(w)))}};
    }
    r.verdicts.push_back(symmetrization_check(d));
    r.verdicts.push_back(totally_real_certificate(d));
    const Certificate round_trip = check_decomposition(cylinder_data(d), sys.E, sys.m, sys.n);
    if (!round_trip.verdict) {
        throw Error(ErrorCode::InternalInconsistency, "derived cylinder data fails the decomposition identities");
    }
    r.verdicts.push_back(round_trip);
    if (hv.trace() != FieldElement(d.field, Rational(2)) + d.t) {
        throw Error(ErrorCode::InternalInconsistency, "trace(Ph Pv) differs from 2 + t");
    }
    return {r, 0};
}

Outcome tracefield(const Polynomial& p, const std::string& range) {
    const AlgebraicReal lambda = choose_root(p, range);
    const AlgebraicReal image = trace_plus_inverse(p, lambda);
    const NumberField k = NumberField::generated_by(image);
    Report r{"tracefield", {is_totally_real_field(k)}, Json::object()};
    r.data["p"] = to_pretty(p);
    r.data["p_coeffs"] = to_json(p);
    r.data["lambda"] = algebraic_display(lambda);
    r.data["lambda_plus_inverse"] = algebraic_display(image);
    r.data["trace_minpoly"] = to_pretty(k.minpoly());
    r.data["trace_minpoly_coeffs"] = to_json(k.minpoly());
    r.data["degree"] = k.degree();
    r.data["trace_field"] = describe(k);
    return {r, 0};
}

Outcome certify(const Polynomial& p, const std::string& range) {
    const AlgebraicReal lambda = choose_root(p, range);
    Report r{"certify-no-parabolic", {no_parabolic_certificate(p, lambda)}, Json::object()};
    r.data["p"] = to_pretty(p);
    r.data["p_coeffs"] = to_json(p);
    r.data["lambda"] = algebraic_display(lambda);
    return {r, r.verdicts.front().outcome == bouillabaisse::Outcome::no_parabolic ? 0 : 1};
}

Outcome pisot(const Polynomial& p) {
    Report r{"pisot", {pisot_check(p)}, Json::object()};
    r.data["p"] = to_pretty(p);
    r.data["p_coeffs"] = to_json(p);
    return {r, r.verdicts.front().verdict ? 0 : 1};
}

std::pair<int, int> parse_range(const std::string& range) {
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "expected --n-range a..b");
    try {
        const int a = std::stoi(range.substr(0, dots)), b = std::stoi(range.substr(dots + 2));
        if (a > b) throw Error(ErrorCode::InvalidInput, "empty --n-range " + range);
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "expected --n-range a..b, got '" + range + "'");
    }
}

Outcome ay(std::optional<int> n, const std::string& range) {
    int lo = 0, hi = 0;
    if (n && !range.empty()) throw Error(ErrorCode::InvalidInput, "give either --n or --n-range");
    if (n) {
        lo = hi = *n;
    } else if (!range.empty()) {
        std::tie(lo, hi) = parse_range(range);
    } else {
        throw Error(ErrorCode::InvalidInput, "--n or --n-range is required");
    }
    for (int k : {lo, hi})
        if (k < 3) throw Error(ErrorCode::NOutOfRange, "n = " + std::to_string(k) + " (need n >= 3)");

    // members are independent; results are collected in order of n
    std::vector<std::future<AyReport>> jobs;
    for (int k = lo; k <= hi; ++k) jobs.push_back(std::async(std::launch::async, ay_report, k));
    Report r{"ay", {}, Json{{"members", Json::array()}}};
    bool expected = true;
    for (auto& job : jobs) {
        const AyReport member = job.get();
        Json j = to_json(member);
        j["lambda"] = to_json(member.lambda);
        r.data["members"].push_back(j);
        r.verdicts.push_back(member.pisot);
        r.verdicts.push_back(member.pisot_lemma);
        r.verdicts.push_back(member.no_parabolic);
        expected = expected && member.as_expected();
    }
    return {r, expected ? 0 : 3};
}

Mat2 rational_matrix(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2) {
        throw Error(ErrorCode::ParseError, "expected a 2x2 matrix [[a, b], [c, d]]");
    }
    const NumberField q = NumberField::rationals();
    return {element_from_json(q, j[0][0]), element_from_json(q, j[0][1]), element_from_json(q, j[1][0]),
            element_from_json(q, j[1][1])};
}

Outcome classify_command(const std::string& input, const std::string& word, const std::string& matrix) {
    std::optional<Mat2> m;
    Json data = Json::object();
    if (!matrix.empty()) {
        if (!input.empty() || !word.empty()) throw Error(ErrorCode::InvalidInput, "--matrix excludes --input/--word");
        m = rational_matrix(load_input(matrix));
    } else {
        if (input.empty()) throw Error(ErrorCode::InvalidInput, "give --matrix, or --input with --word");
        const ThurstonDerived d = build(system_from_json(load_input(input)));
        const auto [ph, pv] = parabolic_generators(d);
        m = evaluate_word(word, ph, pv);
        data["word"] = to_string(parse_word(word));
        data["trace_field"] = describe(d.field);
        data["field"] = to_json(d.field);
    }
    data["matrix"] = to_json(*m);
    data["trace"] = to_json(m->trace());
    data["class"] = std::string(to_string(classify(*m)));
    return {Report{"classify", {}, data}, 0};
}

Outcome check_decomposition_command(const std::string& input) {
    const Json j = load_input(input);
    const IntMatrix e = int_matrix_from_json(j.at("E"));
    ThurstonSystem shape{e, {}, {}, std::nullopt, std::nullopt};
    auto ints = [&](const char* key) {
        std::vector<Integer> out;
        if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::ParseError, std::string("missing ") + key);
        for (const auto& v : j.at(key)) out.push_back(integer_from_json(v));
        return out;
    };
    shape.m = ints("m");
    shape.n = ints("n");
    validate(shape);
    const NumberField k = j.contains("field") ? field_from_json(j.at("field")) : NumberField::rationals();
    auto vec = [&](const char* key) {
        std::vector<FieldElement> out;
        if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::ParseError, std::string("missing ") + key);
        for (const auto& v : j.at(key)) out.push_back(element_from_json(k, v));
        return out;
    };
    auto scalar = [&](const char* key) {
        if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing ") + key);
        return element_from_json(k, j.at(key));
    };
    const CylinderData data{vec("x"), vec("y"), vec("xi"), vec("eta"), scalar("c"), scalar("d")};
    Report r{"check-decomposition", {check_decomposition(data, e, shape.m, shape.n)}, Json::object()};
    r.data["field"] = to_json(k);
    r.data["trace_field"] = describe(k);
    r.data["cylinders"] = to_json(data);
    return {r, r.verdicts.front().verdict ? 0 : 1};
}

// ---------------------------------------------------------------- text

std::string pretty(const Json& poly) { return to_pretty(polynomial_from_json(poly)); }

std::string in_t(const Json& element) {
    std::string s = pretty(element.at("rep"));
    for (char& ch : s)
        if (ch == 'X') ch = 't';
    return s;
}

std::string display(const Json& algebraic) {
    const Interval range = interval_from_json(algebraic.at("isolation"));
    if (range.lo == range.hi) return "= " + to_string(range.lo);
    return "in [" + to_decimal_floor(range.lo, 6) + ", " + to_decimal_ceil(range.hi, 6) + "] (root of " +
           pretty(algebraic.at("defining")) + ")";
}

std::string matrix_text(const Json& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ", ";
            out += rows[i][j].is_string() ? rows[i][j].get<std::string>() : in_t(rows[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

std::string tuple_text(const Json& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].is_string() ? values[i].get<std::string>() : in_t(values[i]);
    }
    return out + ")";
}

void certificate_text(std::ostringstream& out, const Certificate& c) {
    out << "  " << to_string(c.question) << ": " << to_string(c.outcome) << "\n";
    for (const auto& count : c.counts) {
        out << "    " << to_string(count.kind) << "(" << count.polynomial << ") = " << count.value << "\n";
    }
    for (const auto& [name, value] : c.flags) out << "    " << (value ? "[holds] " : "[fails] ") << name << "\n";
    for (const auto& [name, p] : c.polynomials) out << "    " << name << " = " << to_pretty(p) << "\n";
    if (!c.diagnostic.empty()) out << "    " << c.diagnostic << "\n";
}

void construct_text(std::ostringstream& out, const Json& d) {
    out << "E = " << matrix_text(d["system"]["E"]) << ", m = " << tuple_text(d["system"]["m"])
        << ", n = " << tuple_text(d["system"]["n"]) << "\n";
    out << "Fn Fm = " << matrix_text(d["product"]["entries"]) << "\n";
    out << "charpoly(Fn Fm) = " << pretty(d["charpoly"]) << "\n";
    out << "t " << display(d["t"]) << "\n";
    out << "trace field: " << d["trace_field"].get<std::string>();
    if (d["degree"].get<int>() > 1) out << ", degree " << d["degree"].get<int>();
    out << "\n";
    out << "x = " << tuple_text(d["x"]) << "\n";
    out << "eta = " << tuple_text(d["eta"]) << "\n";
    out << "c = " << in_t(d["c"]) << ", d = " << in_t(d["d"]) << "\n";
    out << "trace(Ph Pv) = " << in_t(d["trace_PhPv"]) << ": " << d["class_PhPv"].get<std::string>() << "\n";
    if (d.contains("word")) {
        const Json& w = d["word"];
        out << "word " << w["word"].get<std::string>() << " = " << matrix_text(w["matrix"])
            << ", trace " << in_t(w["trace"]) << ": " << w["class"].get<std::string>() << "\n";
    }
}

void ay_member_text(std::ostringstream& out, const Json& m) {
    out << "n = " << m["n"].get<int>() << "\n";
    out << "  P = " << m["P"].get<std::string>() << (m["irreducible"].get<bool>() ? " (irreducible)" : " (reducible)")
        << "\n";
    out << "  lambda " << display(m["lambda"]) << "\n";
    out << "  real roots of P: " << m["real_roots"].get<int>() << " (expected " << m["expected_real_roots"].get<int>()
        << ")\n";
    out << "  Q = (X-1) P = " << m["Q"].get<std::string>() << (m["q_identity"].get<bool>() ? "" : " (identity FAILS)")
        << ", real roots " << m["q_real_roots"].get<int>() << " (expected " << m["expected_q_real_roots"].get<int>()
        << ")\n";
    out << "  genus " << m["genus"].get<int>() << ", stratum " << m["stratum"].get<std::string>() << " (annotation)\n";
}

std::string text(const Report& r) {
    std::ostringstream out;
    out << r.command << "\n";
    const Json& d = r.data;
    if (r.command == "construct") {
        construct_text(out, d);
    } else if (r.command == "tracefield") {
        out << "p = " << d["p"].get<std::string>() << "\n";
        out << "lambda " << display(d["lambda"]) << "\n";
        out << "lambda + 1/lambda " << display(d["lambda_plus_inverse"]) << "\n";
        out << "minimal polynomial: " << d["trace_minpoly"].get<std::string>() << ", degree "
            << d["degree"].get<int>() << "\n";
        out << "trace field: " << d["trace_field"].get<std::string>() << "\n";
    } else if (r.command == "certify-no-parabolic" || r.command == "pisot") {
        out << "p = " << d["p"].get<std::string>() << "\n";
        if (d.contains("lambda")) out << "lambda " << display(d["lambda"]) << "\n";
    } else if (r.command == "ay") {
        const Json& members = d["members"];
        for (std::size_t i = 0; i < members.size(); ++i) {
            ay_member_text(out, members[i]);
            for (std::size_t k = 3 * i; k < 3 * i + 3 && k < r.verdicts.size(); ++k) certificate_text(out, r.verdicts[k]);
        }
        return out.str();
    } else if (r.command == "classify") {
        if (d.contains("word")) {
            out << "word " << d["word"].get<std::string>() << " over " << d["trace_field"].get<std::string>() << "\n";
        }
        out << "matrix " << matrix_text(d["matrix"]) << "\n";
        out << "trace " << in_t(d["trace"]) << "\n";
        out << "class: " << d["class"].get<std::string>() << "\n";
    } else if (r.command == "check-decomposition") {
        out << "field: " << d["trace_field"].get<std::string>() << "\n";
    }
    if (!r.verdicts.empty()) out << "verdicts\n";
    for (const auto& c : r.verdicts) certificate_text(out, c);
    return out.str();
}

}  // namespace

Json to_json(const Report& report) {
    Json verdicts = Json::array();
    for (const auto& c : report.verdicts) verdicts.push_back(bouillabaisse::to_json(c));
    return Json{{"command", report.command}, {"verdicts", verdicts}, {"data", report.data}};
}

Report report_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("command") || !j.contains("verdicts") || !j.contains("data")) {
        throw Error(ErrorCode::ParseError, "a report needs command, verdicts and data");
    }
    Report r{j.at("command").get<std::string>(), {}, j.at("data")};
    for (const auto& c : j.at("verdicts")) r.verdicts.push_back(certificate_from_json(c));
    return r;
}

std::string render(const Report& report, Mode mode) {
    if (mode == Mode::json) return to_json(report).dump(2) + "\n";
    return text(report);
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InternalInconsistency:
        case ErrorCode::AsymmetryDetected:
            return 3;
        default:
            return 2;
    }
}

RunResult run(const std::vector<std::string>& argv) {
    CLI::App app{"Exact certificates for Veech groups built from cylinder intersection data", "bouillabaisse"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "bouillabaisse 0.1.0");

    bool json = false;
    std::string input, poly, word, lambda, matrix, range;
    std::optional<int> n;
    auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit the JSON report"); };

    auto* construct_cmd = app.add_subcommand("construct", "Build t, Q[t] and the parabolic pair from (E, m, n)");
    construct_cmd->add_option("--input", input, "System JSON: a path, '-' for stdin, or inline")->required();
    construct_cmd->add_option("--word", word, "Also evaluate and classify a word in h, v, H, V");
    with_json(construct_cmd);

    auto* tracefield_cmd = app.add_subcommand("tracefield", "Minimal polynomial of lambda + 1/lambda");
    auto* certify_cmd = app.add_subcommand("certify-no-parabolic", "Certify that no parabolic elements exist");
    for (auto* sub : {tracefield_cmd, certify_cmd}) {
        sub->add_option("--poly", poly, "Polynomial of lambda, e.g. \"X^3-X^2-X-1\"");
        sub->add_option("--input", input, "Polynomial JSON");
        sub->add_option("--lambda", lambda, "Isolating interval lo,hi (default: largest real root)");
        with_json(sub);
    }

    auto* pisot_cmd = app.add_subcommand("pisot", "Decide whether the root > 1 is a Pisot number");
    pisot_cmd->add_option("--poly", poly, "Monic integer polynomial");
    pisot_cmd->add_option("--input", input, "Polynomial JSON");
    with_json(pisot_cmd);

    auto* ay_cmd = app.add_subcommand("ay", "Analyse members of the Arnoux-Yoccoz family");
    ay_cmd->add_option("--n", n, "Member index n >= 3");
    ay_cmd->add_option("--n-range", range, "Range a..b, members run independently");
    with_json(ay_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Classify an element of SL2 by its trace");
    classify_cmd->add_option("--input", input, "System JSON whose parabolic pair generates the word");
    classify_cmd->add_option("--word", word, "Word in h, v, H, V");
    classify_cmd->add_option("--matrix", matrix, "Rational 2x2 matrix as JSON [[a, b], [c, d]]");
    with_json(classify_cmd);

    auto* check_cmd = app.add_subcommand("check-decomposition", "Check the cylinder identities exactly");
    check_cmd->add_option("--input", input, "Cylinder data JSON")->required();
    with_json(check_cmd);

    RunResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        Outcome o;
        if (construct_cmd->parsed()) {
            o = construct(input, word);
        } else if (tracefield_cmd->parsed()) {
            o = tracefield(load_polynomial(poly, input), lambda);
        } else if (certify_cmd->parsed()) {
            o = certify(load_polynomial(poly, input), lambda);
        } else if (pisot_cmd->parsed()) {
            o = pisot(load_polynomial(poly, input));
        } else if (ay_cmd->parsed()) {
            o = ay(n, range);
        } else if (classify_cmd->parsed()) {
            o = classify_command(input, word, matrix);
        } else {
            o = check_decomposition_command(input);
        }
        result.out = render(o.report, json ? Mode::json : Mode::text);
        result.exit_code = o.exit_code;
    } catch (const Error& e) {
        result.exit_code = exit_code_for(e.code());
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const nlohmann::json::exception& e) {
        result.exit_code = 2;
        result.err = std::string("error: ParseError: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace bouillabaisse::cli
