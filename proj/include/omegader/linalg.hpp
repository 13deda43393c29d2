#pragma once

#include <concepts>
#include <vector>

#include "omegader/matrix.hpp"
#include "omegader/rational.hpp"

namespace omegader {

// Scalars that form a field. Using rref/nullspace/rank with a ring such as
// Poly is rejected at compile time.
template <class T>
concept FieldScalar = requires(const T& a, const T& b) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    T(0);
    T(1);
};

template <class T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<size_t> pivots;

    size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class T>
inline void sub_product(T& x, const T& a, const T& b) {
    x -= a * b;
}

inline void sub_product(Rational& x, const Rational& a, const Rational& b) {
    x.sub_mul(a, b);
}

// Gaussian elimination in place. With `full` the result is the reduced row
// echelon form; otherwise only rows below each pivot are cleared.
template <FieldScalar T>
std::vector<size_t> eliminate(Matrix<T>& m, bool full) {
    std::vector<size_t> pivots;
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    std::vector<size_t> support;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Prefer the sparsest candidate row to limit fill-in.
        size_t best = rows;
        size_t best_nnz = cols + 1;
        for (size_t i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            size_t nnz = 0;
            for (size_t j = c; j < cols && nnz < best_nnz; ++j) nnz += m(i, j).is_zero() ? 0 : 1;
            if (nnz < best_nnz) {
                best = i;
                best_nnz = nnz;
            }
        }
        if (best == rows) continue;
        m.swap_rows(r, best);

        const T inv = m(r, c).inverse();
        support.clear();
        for (size_t j = c; j < cols; ++j) {
            if (m(r, j).is_zero()) continue;
            m(r, j) = m(r, j) * inv;
            support.push_back(j);
        }
        for (size_t i = full ? 0 : r + 1; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const T factor = m(i, c);
            for (size_t j : support) sub_product(m(i, j), factor, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <FieldScalar T>
RrefResult<T> rref(Matrix<T> m) {
    auto pivots = detail::eliminate(m, true);
    return {std::move(m), std::move(pivots)};
}

template <FieldScalar T>
size_t rank(Matrix<T> m) {
    return detail::eliminate(m, false).size();
}

// Basis of the right kernel: one vector per non-pivot column, with that
// coordinate set to 1 and the other free coordinates 0.
template <FieldScalar T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
    const auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (size_t i = 0; i < rr.pivots.size(); ++i) {
            if (!rr.reduced(i, f).is_zero()) v[rr.pivots[i]] = -rr.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of a square matrix; throws PreconditionError when singular.
template <FieldScalar T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return {};
    Matrix<T> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    const auto rr = rref(std::move(aug));
    if (rr.rank() < n || rr.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    Matrix<T> out(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out(i, j) = rr.reduced(i, n + j);
    }
    return out;
}

// Stacks vectors as matrix rows.
template <class T>
Matrix<T> rows_matrix(const std::vector<std::vector<T>>& vectors, size_t width) {
    Matrix<T> m(vectors.size(), width);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != width) throw PreconditionError("vector length mismatch");
        for (size_t j = 0; j < width; ++j) m(i, j) = vectors[i][j];
    }
    return m;
}

}  // namespace omegader
