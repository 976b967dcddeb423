#pragma once

#include "ppv/rat.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ppv {

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline std::size_t complexity(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
inline std::size_t complexity(const Rat& r) { return r.complexity(); }

/// Row-major dense matrix over an exact field (mpq_class or Rat).
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T>
struct Echelon {
    DenseMatrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form. The pivot in each
/// column is the entry of smallest size, which limits expression swell over
/// Q(t).
template <class T>
Echelon<T> row_reduce(DenseMatrix<T> m) {
    Echelon<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (is_zero(m(i, col))) continue;
            if (!best || complexity(m(i, col)) < complexity(m(*best, col))) best = i;
        }
        if (!best) continue;
        m.swap_rows(row, *best);
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const DenseMatrix<T>& m) {
    return row_reduce(m).rank();
}

/// Basis of {v : m v = 0}; one vector per free column, that column set to 1.
template <class T>
std::vector<std::vector<T>> nullspace(const DenseMatrix<T>& m) {
    auto e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A solution of m v = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const DenseMatrix<T>& m, const std::vector<T>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    DenseMatrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    std::vector<T> v(m.cols(), T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = e.reduced(r, m.cols());
    return v;
}

template <class T>
T determinant(DenseMatrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    T det(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = col; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            if (!best || complexity(m(i, col)) < complexity(m(*best, col))) best = i;
        }
        if (!best) return T(0);
        if (*best != col) {
            m.swap_rows(col, *best);
            det = -det;
        }
        det = det * m(col, col);
        T inv = T(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            T f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!is_zero(m(col, j))) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

} // namespace ppv
