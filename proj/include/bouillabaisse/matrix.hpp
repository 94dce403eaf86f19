#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bouillabaisse/error.hpp"
#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/rational.hpp"
#include "bouillabaisse/real_roots.hpp"

namespace bouillabaisse {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw Error(ErrorCode::DimensionMismatch, "entry count does not match " + std::to_string(rows_) + "x" +
                                                          std::to_string(cols_));
        }
    }
    /// Rows given as nested lists; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows);
    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<T>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<T>& entries() const noexcept { return entries_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row and one column");
    }
    Matrix out(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != out.cols_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        }
        for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

template <class T>
Matrix<T> Matrix<T>::diagonal(const std::vector<T>& diag) {
    Matrix out(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
    return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum of different shapes");
    }
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

template <class T>
Matrix<T> operator*(const T& c, const Matrix<T>& a) {
    Matrix<T> out(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

RatMatrix to_rational(const IntMatrix& a);

/// det(X I - A), monic of degree n (Faddeev-LeVerrier).
Polynomial charpoly(const RatMatrix& a);
Polynomial charpoly(const IntMatrix& a);

/// p(A) for a square matrix A (Horner).
RatMatrix evaluate(const Polynomial& p, const RatMatrix& a);

struct PrimitivityReport {
    bool strongly_connected = false;
    /// gcd of cycle lengths of the support digraph; 0 when there is no cycle.
    Integer period;
    bool primitive() const { return strongly_connected && period == 1; }
};

/// Support digraph analysis of a square nonnegative integer matrix.
/// Throws NegativeEntry / DimensionMismatch.
PrimitivityReport primitivity(const IntMatrix& a);
inline bool is_primitive(const IntMatrix& a) { return primitivity(a).primitive(); }

/// Largest real root of charpoly(A) for primitive nonnegative A, with an
/// isolating interval. Throws NotPrimitive with the digraph diagnosis.
AlgebraicReal perron_root(const IntMatrix& a);

std::string describe(const IntMatrix& a);

}  // namespace bouillabaisse
