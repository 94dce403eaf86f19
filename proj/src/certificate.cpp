#include "bouillabaisse/certificate.hpp"

#include <array>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/unit_disk.hpp"

namespace bouillabaisse {

namespace {

constexpr std::array kQuestionNames{"totally_real", "pisot", "no_parabolic", "pisot_lemma", "consistency"};
constexpr std::array kOutcomeNames{"totally_real", "not_totally_real", "pisot",          "not_pisot",   "no_parabolic",
                                   "inconclusive", "not_applicable",   "consistent",     "inconsistent"};
constexpr std::array kCountKindNames{"real_roots", "real_roots_above_one", "unit_disk", "degree"};

template <class Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::array<const char*, N>& names, const char* what) {
    for (std::size_t i = 0; i < N; ++i)
        if (s == names[i]) return static_cast<Enum>(i);
    throw Error(ErrorCode::ParseError, std::string("unknown ") + what + " '" + std::string(s) + "'");
}

int require(const Certificate& cert, std::string_view poly, CountKind kind) {
    if (auto c = cert.count(poly, kind)) return *c;
    throw Error(ErrorCode::InvalidInput, "certificate lacks the " + std::string(to_string(kind)) + " count of '" +
                                             std::string(poly) + "'");
}

bool pisot_counts(const Certificate& cert, std::string_view poly) {
    const int degree = require(cert, poly, CountKind::degree);
    return require(cert, poly, CountKind::real_roots_above_one) == 1 &&
           require(cert, poly, CountKind::unit_disk) == degree - 1;
}

bool all_real(const Certificate& cert, std::string_view poly) {
    return require(cert, poly, CountKind::real_roots) == require(cert, poly, CountKind::degree);
}

}  // namespace

std::string_view to_string(Question q) noexcept { return kQuestionNames[static_cast<std::size_t>(q)]; }
std::string_view to_string(Outcome o) noexcept { return kOutcomeNames[static_cast<std::size_t>(o)]; }
std::string_view to_string(CountKind k) noexcept { return kCountKindNames[static_cast<std::size_t>(k)]; }
Question parse_question(std::string_view s) { return parse_enum<Question>(s, kQuestionNames, "question"); }
Outcome parse_outcome(std::string_view s) { return parse_enum<Outcome>(s, kOutcomeNames, "outcome"); }
CountKind parse_count_kind(std::string_view s) { return parse_enum<CountKind>(s, kCountKindNames, "count kind"); }

int recount(const Polynomial& p, CountKind kind) {
    switch (kind) {
        case CountKind::real_roots:
            return count_real_roots(p);
        case CountKind::real_roots_above_one:
            return count_real_roots_above(p, Rational(1));
        case CountKind::unit_disk:
            try {
                return count_roots_in_unit_disk(p);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoundaryRoot) throw;
                return -1;
            }
        case CountKind::degree:
            return p.degree();
    }
    throw Error(ErrorCode::InvalidInput, "unknown count kind");
}

void Certificate::add_polynomial(std::string name, Polynomial p) {
    for (auto& [key, value] : polynomials) {
        if (key == name) {
            value = std::move(p);
            return;
        }
    }
    polynomials.emplace_back(std::move(name), std::move(p));
}

int Certificate::add_count(const std::string& poly, CountKind kind) {
    const int value = recount(polynomial(poly), kind);
    counts.push_back({poly, kind, value});
    return value;
}

const Polynomial& Certificate::polynomial(std::string_view name) const {
    for (const auto& [key, value] : polynomials)
        if (key == name) return value;
    throw Error(ErrorCode::InvalidInput, "certificate has no polynomial '" + std::string(name) + "'");
}

std::optional<int> Certificate::count(std::string_view poly, CountKind kind) const {
    for (const auto& c : counts)
        if (c.polynomial == poly && c.kind == kind) return c.value;
    return std::nullopt;
}

std::optional<bool> Certificate::flag(std::string_view name) const {
    for (const auto& [key, value] : flags)
        if (key == name) return value;
    return std::nullopt;
}

Outcome derive_outcome(const Certificate& cert) {
    switch (cert.question) {
        case Question::totally_real:
            return all_real(cert, "minpoly") ? Outcome::totally_real : Outcome::not_totally_real;
        case Question::pisot:
            return pisot_counts(cert, "p") ? Outcome::pisot : Outcome::not_pisot;
        case Question::no_parabolic:
            return all_real(cert, "trace_minpoly") ? Outcome::inconclusive : Outcome::no_parabolic;
        case Question::pisot_lemma:
            if (!pisot_counts(cert, "beta") || all_real(cert, "beta")) return Outcome::not_applicable;
            return all_real(cert, "trace_minpoly") ? Outcome::totally_real : Outcome::not_totally_real;
        case Question::consistency: {
            for (const auto& [name, value] : cert.flags)
                if (!value) return Outcome::inconsistent;
            for (const auto& [name, p] : cert.polynomials) {
                auto real = cert.count(name, CountKind::real_roots);
                auto degree = cert.count(name, CountKind::degree);
                if (real && degree && *real != *degree) return Outcome::inconsistent;
            }
            return Outcome::consistent;
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown question");
}

bool verdict_of(Question question, Outcome outcome) {
    switch (question) {
        case Question::totally_real:
            return outcome == Outcome::totally_real;
        case Question::pisot:
            return outcome == Outcome::pisot;
        case Question::no_parabolic:
            return outcome == Outcome::no_parabolic;
        case Question::pisot_lemma:
            return outcome == Outcome::not_totally_real;
        case Question::consistency:
            return outcome == Outcome::consistent;
    }
    return false;
}

bool recheck(const Certificate& cert) {
    for (const auto& c : cert.counts)
        if (recount(cert.polynomial(c.polynomial), c.kind) != c.value) return false;
    const Outcome outcome = derive_outcome(cert);
    return outcome == cert.outcome && verdict_of(cert.question, outcome) == cert.verdict;
}

}  // namespace bouillabaisse
