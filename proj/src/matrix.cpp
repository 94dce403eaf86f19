#include "bouillabaisse/matrix.hpp"

#include <deque>

#include "bouillabaisse/charpoly.hpp"

namespace bouillabaisse {

RatMatrix to_rational(const IntMatrix& a) {
    std::vector<Rational> entries;
    entries.reserve(a.entries().size());
    for (const auto& v : a.entries()) entries.emplace_back(v);
    return {a.rows(), a.cols(), std::move(entries)};
}

Polynomial charpoly(const RatMatrix& a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    }
    return faddeev_leverrier(a.entries(), a.rows());
}

Polynomial charpoly(const IntMatrix& a) { return charpoly(to_rational(a)); }

RatMatrix evaluate(const Polynomial& p, const RatMatrix& a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
    }
    RatMatrix acc(a.rows(), a.cols());
    const RatMatrix id = RatMatrix::identity(a.rows());
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + (*it) * id;
    return acc;
}

namespace {

std::vector<long> bfs_levels(const std::vector<std::vector<std::size_t>>& adj, std::size_t start) {
    std::vector<long> level(adj.size(), -1);
    std::deque<std::size_t> queue{start};
    level[start] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u]) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

}  // namespace

PrimitivityReport primitivity(const IntMatrix& a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "primitivity of a non-square matrix");
    }
    const std::size_t n = a.rows();
    std::vector<std::vector<std::size_t>> forward(n), backward(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) < 0) {
                throw Error(ErrorCode::NegativeEntry, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
                                                          to_string(a(i, j)));
            }
            if (a(i, j) > 0) {
                forward[i].push_back(j);
                backward[j].push_back(i);
            }
        }
    }
    PrimitivityReport report;
    const auto level = bfs_levels(forward, 0);
    const auto back_level = bfs_levels(backward, 0);
    report.strongly_connected = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (level[i] < 0 || back_level[i] < 0) report.strongly_connected = false;
    }
    // In a strongly connected digraph the period is the gcd over edges u->v
    // of level(u) + 1 - level(v).
    Integer period(0);
    for (std::size_t u = 0; u < n; ++u) {
        if (level[u] < 0) continue;
        for (std::size_t v : forward[u]) {
            if (level[v] < 0) continue;
            period = gcd(period, Integer(level[u] + 1 - level[v]));
        }
    }
    report.period = abs(period);
    return report;
}

AlgebraicReal perron_root(const IntMatrix& a) {
    const PrimitivityReport report = primitivity(a);
    if (!report.primitive()) {
        std::string why = "support digraph is not strongly connected";
        if (report.strongly_connected) {
            why = report.period == 0 ? "support digraph has no cycle"
                                     : "support digraph is periodic with period " + to_string(report.period);
        }
        throw Error(ErrorCode::NotPrimitive, why);
    }
    auto roots = isolate_real_roots(charpoly(a));
    if (roots.empty()) {
        throw Error(ErrorCode::InternalInconsistency, "primitive matrix without a real eigenvalue");
    }
    return roots.back();
}

std::string describe(const IntMatrix& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j) out += (j ? "," : "") + to_string(a(i, j));
        out += "]";
    }
    return out + "]";
}

}  // namespace bouillabaisse
