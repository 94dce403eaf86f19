#include "doctest.h"

#include <cstdlib>

#include "bouillabaisse/cli.hpp"

using namespace bouillabaisse;
using cli::run;

namespace {

cli::RunResult call(std::vector<std::string> args) {
    args.insert(args.begin(), "bouillabaisse");
    return run(args);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kTorus = R"({"E": [[1]], "m": [1], "n": [1]})";
const std::string kGolden = R"({"E": [["1", "1"], ["1", "0"]], "m": ["1", "1"], "n": ["1", "1"]})";

}  // namespace

TEST_CASE("construct") {
    const auto torus = call({"construct", "--input", kTorus});
    CHECK(torus.exit_code == 0);
    CHECK(contains(torus.out, "t = 1\n"));
    CHECK(contains(torus.out, "trace field: Q\n"));
    CHECK(contains(torus.out, "trace(Ph Pv) = 3: hyperbolic"));
    CHECK(torus.err.empty());

    const auto golden = call({"construct", "--input", kGolden, "--json"});
    CHECK(golden.exit_code == 0);
    const Json j = Json::parse(golden.out);
    CHECK(j["data"]["trace_field"] == "Q[t]/(X^2-3*X+1)");
    CHECK(j["data"]["x"][1]["rep"]["coeffs"] == Json::array({"-2", "1"}));
    CHECK(j["verdicts"].size() == 3);

    const auto worded = call({"construct", "--input", kGolden, "--word", "hvH"});
    CHECK(contains(worded.out, "word hvH"));

    const auto periodic = call({"construct", "--input", R"({"E": [[1, 0], [0, 1]], "m": [1, 1], "n": [1, 1]})"});
    CHECK(periodic.exit_code == 2);
    CHECK(contains(periodic.err, "NotPrimitive"));
    CHECK(call({"construct", "--input", R"({"E": [[1, 0], [1, 0]], "m": [1, 1], "n": [1, 1]})"}).exit_code == 2);
    CHECK(call({"construct", "--input", "{not json"}).exit_code == 2);
    CHECK(call({"construct", "--input", "/nonexistent/system.json"}).exit_code == 2);
    CHECK(call({"construct"}).exit_code == 2);
}

TEST_CASE("polynomial commands and exit codes") {
    const auto not_pisot = call({"pisot", "--poly", "X^2-2"});
    CHECK(not_pisot.exit_code == 1);
    CHECK(contains(not_pisot.out, "not_pisot"));
    CHECK(call({"pisot", "--poly", "X^3-X^2-X-1"}).exit_code == 0);
    CHECK(call({"pisot", "--poly", "2X^2-1"}).exit_code == 2);
    CHECK(call({"pisot", "--input", R"({"coeffs": ["-1", "-1", "1"]})"}).exit_code == 0);

    CHECK(call({"certify-no-parabolic", "--poly", "X^3-X^2-X-1"}).exit_code == 0);
    const auto inconclusive = call({"certify-no-parabolic", "--poly", "X^2-3X+1"});
    CHECK(inconclusive.exit_code == 1);
    CHECK(contains(inconclusive.out, "inconclusive"));
    CHECK(call({"certify-no-parabolic", "--poly", "X^2-3X+1", "--lambda", "0,1"}).exit_code == 2);
    CHECK(call({"certify-no-parabolic", "--poly", "X^2+1"}).exit_code == 2);

    const auto trace = call({"tracefield", "--poly", "X^2-X-1", "--json"});
    CHECK(trace.exit_code == 0);
    CHECK(Json::parse(trace.out)["data"]["trace_minpoly"] == "X^2-5");
    const auto negative_root = call({"tracefield", "--poly", "X^2-X-1", "--lambda", "-1,0"});
    CHECK(contains(negative_root.out, "minimal polynomial: X^2-5"));
}

TEST_CASE("ay") {
    const auto three = call({"ay", "--n", "3", "--json"});
    CHECK(three.exit_code == 0);
    const Json j = Json::parse(three.out);
    const Json& member = j["data"]["members"][0];
    CHECK(member["P"] == "X^3-X^2-X-1");
    CHECK(member["P_coeffs"]["coeffs"] == Json::array({"-1", "-1", "-1", "1"}));
    CHECK(j["verdicts"][2]["outcome"] == "no_parabolic");

    const auto range = call({"ay", "--n-range", "3..8"});
    CHECK(range.exit_code == 0);
    CHECK(contains(range.out, "n = 8"));
    CHECK(call({"ay", "--n", "2"}).exit_code == 2);
    CHECK(call({"ay", "--n-range", "5..3"}).exit_code == 2);
    CHECK(call({"ay", "--n-range", "x"}).exit_code == 2);
    CHECK(call({"ay"}).exit_code == 2);
}

TEST_CASE("classify and check-decomposition") {
    const auto elliptic = call({"classify", "--matrix", R"([["0", "-1"], ["1", "0"]])"});
    CHECK(elliptic.exit_code == 0);
    CHECK(contains(elliptic.out, "class: elliptic"));
    CHECK(call({"classify", "--matrix", R"([["1", "1"], ["1", "1"]])"}).exit_code == 2);
    const auto word = call({"classify", "--input", kGolden, "--word", "hv", "--json"});
    CHECK(Json::parse(word.out)["data"]["class"] == "hyperbolic");
    CHECK(call({"classify", "--input", kGolden, "--word", "hq"}).exit_code == 2);

    const std::string good = R"({"E": [[1]], "m": [1], "n": [1], "x": ["1"], "y": ["1"], "xi": ["1"],
                                 "eta": ["1"], "c": "1", "d": "1"})";
    CHECK(call({"check-decomposition", "--input", good}).exit_code == 0);
    const std::string bad = R"({"E": [[1]], "m": [1], "n": [1], "x": ["1"], "y": ["2"], "xi": ["1"],
                                "eta": ["1"], "c": "1", "d": "1"})";
    const auto failed = call({"check-decomposition", "--input", bad});
    CHECK(failed.exit_code == 1);
    CHECK(contains(failed.out, "[fails] Dm x = c y"));
}

TEST_CASE("unknown flags and help") {
    CHECK(call({"pisot", "--poly", "X^2-2", "--frobnicate"}).exit_code == 2);
    CHECK(call({}).exit_code == 2);
    CHECK(call({"nonsense"}).exit_code == 2);
    const auto help = call({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "certify-no-parabolic"));
}

TEST_CASE("determinism and report round trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"ay", "--n-range", "3..6", "--json"},
                                                                  {"construct", "--input", kGolden, "--json"},
                                                                  {"pisot", "--poly", "X^2-X+1", "--json"}}) {
        const auto first = call(args), second = call(args);
        CHECK(first.out == second.out);
        const cli::Report report = cli::report_from_json(Json::parse(first.out));
        CHECK(cli::render(report, cli::Mode::json) == first.out);
        CHECK(cli::report_from_json(cli::to_json(report)) == report);
        for (const auto& cert : report.verdicts) CHECK(recheck(cert));
    }
}

TEST_CASE("exit code mapping") {
    CHECK(cli::exit_code_for(ErrorCode::InternalInconsistency) == 3);
    CHECK(cli::exit_code_for(ErrorCode::AsymmetryDetected) == 3);
    CHECK(cli::exit_code_for(ErrorCode::ParseError) == 2);
    CHECK(cli::exit_code_for(ErrorCode::NotPrimitive) == 2);
}

TEST_CASE("factorization degree cap from the environment") {
    setenv("BOUILLABAISSE_FACTOR_DEGREE_CAP", "2", 1);
    const auto capped = call({"ay", "--n", "3"});
    unsetenv("BOUILLABAISSE_FACTOR_DEGREE_CAP");
    CHECK(capped.exit_code == 2);
    CHECK(contains(capped.err, "DegreeTooLarge"));
    CHECK(call({"ay", "--n", "3"}).exit_code == 0);
}
