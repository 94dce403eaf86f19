#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/real_roots.hpp"

namespace bouillabaisse {

/// What a certificate answers.
enum class Question { totally_real, pisot, no_parabolic, pisot_lemma, consistency };

enum class Outcome {
    totally_real,
    not_totally_real,
    pisot,
    not_pisot,
    no_parabolic,
    inconclusive,
    not_applicable,
    consistent,
    inconsistent,
};

/// How a recorded count is recomputed from its polynomial.
enum class CountKind {
    real_roots,            // distinct real roots (Sturm)
    real_roots_above_one,  // distinct real roots > 1 (Sturm)
    unit_disk,             // roots of modulus < 1 (Schur-Cohn); -1 records a root on the circle
    degree,
};

std::string_view to_string(Question q) noexcept;
std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(CountKind k) noexcept;
Question parse_question(std::string_view s);
Outcome parse_outcome(std::string_view s);
CountKind parse_count_kind(std::string_view s);

struct CountRecord {
    std::string polynomial;  // key into Certificate::polynomials
    CountKind kind = CountKind::degree;
    int value = 0;

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

int recount(const Polynomial& p, CountKind kind);

/// A verdict with the evidence that decides it. Counts name polynomials
/// stored alongside, so the verdict can be recomputed from scratch.
struct Certificate {
    Question question = Question::consistency;
    Outcome outcome = Outcome::inconsistent;
    bool verdict = false;
    std::vector<std::pair<std::string, Polynomial>> polynomials;
    std::vector<CountRecord> counts;
    std::vector<std::pair<std::string, Interval>> intervals;
    std::vector<std::pair<std::string, bool>> flags;
    std::string diagnostic;

    Certificate() = default;
    Certificate(Question q) : question(q) {}

    void add_polynomial(std::string name, Polynomial p);
    /// Computes the count now and stores it.
    int add_count(const std::string& polynomial, CountKind kind);
    void add_interval(std::string name, Interval range) { intervals.emplace_back(std::move(name), std::move(range)); }
    void add_flag(std::string name, bool value) { flags.emplace_back(std::move(name), value); }

    const Polynomial& polynomial(std::string_view name) const;
    std::optional<int> count(std::string_view polynomial, CountKind kind) const;
    std::optional<bool> flag(std::string_view name) const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// The outcome the stored counts and flags imply for the certificate's
/// question. Throws InvalidInput when required evidence is missing.
///   totally_real   "minpoly": real_roots == degree
///   pisot          "p": real_roots_above_one == 1 and unit_disk == degree - 1
///   no_parabolic   "trace_minpoly": real_roots < degree, else inconclusive
///   pisot_lemma    "beta" Pisot with real_roots < degree, else not_applicable;
///                  then the totally_real rule on "trace_minpoly"
///   consistency    every flag true, and real_roots == degree for each
///                  polynomial carrying both counts
Outcome derive_outcome(const Certificate& cert);

/// The verdict attached to an outcome: true for the affirmative answers
/// (totally_real, pisot, no_parabolic, consistent, and a lemma whose
/// conclusion holds), false otherwise.
bool verdict_of(Question question, Outcome outcome);

/// Recomputes every count from the stored polynomials and re-derives the
/// outcome; true iff everything matches what is stored.
bool recheck(const Certificate& cert);

}  // namespace bouillabaisse
