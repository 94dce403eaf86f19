#pragma once

#include <string>
#include <vector>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/json_io.hpp"

namespace bouillabaisse::cli {

struct Report {
    std::string command;
    std::vector<Certificate> verdicts;
    Json data;

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

enum class Mode { json, text };

/// JSON mode is the canonical serialization; text mode is computed from the
/// same structured payload.
std::string render(const Report& report, Mode mode);

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// 0: clean run with the expected verdicts; 1: a certified negative answer
/// (not Pisot, inconclusive, failed identities); 2: bad input; 3: an outcome
/// that contradicts a theorem.
RunResult run(const std::vector<std::string>& argv);

int exit_code_for(ErrorCode code) noexcept;

}  // namespace bouillabaisse::cli
