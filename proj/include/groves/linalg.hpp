#pragma once

#include <utility>
#include <vector>

#include "groves/errors.hpp"
#include "groves/jet.hpp"
#include "groves/polyz.hpp"

namespace groves {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> identity_matrix(size_t n) {
    Matrix<T> m(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Matrix<T> c(n, std::vector<T>(p, T(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == T(0)) continue;
            for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    }
    return c;
}

// Gauss-Jordan inverse over a field (Rational, RatFuncZ, ...).  Exact; throws
// SingularMatrix when no inverse exists.
template <class F>
Matrix<F> field_inverse(Matrix<F> a) {
    const size_t n = a.size();
    Matrix<F> inv = identity_matrix<F>(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw SingularMatrix();
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        F d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            F f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Determinant over a field by Gaussian elimination.
template <class F>
F field_det(Matrix<F> a) {
    const size_t n = a.size();
    F det = F(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        F d = a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            F f = a[i][col] / d;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// Fraction-free (Bareiss) elimination for polynomial matrices: solves
// A X = B exactly over the fraction field without rational-function
// intermediates.  Every intermediate entry is a minor of the input, so
// coefficient growth is bounded by determinant size.
Matrix<RatFuncZ> bareiss_solve(const Matrix<PolyZ>& a, const Matrix<PolyZ>& b);

// Determinant of a polynomial matrix by the same elimination.
PolyZ bareiss_det(Matrix<PolyZ> a);

// Determinant of a matrix of jets, truncated at `order`.  Division-free, so
// it works for jets over plain values and over formal polynomials alike.
template <class R>
Jet<R> jet_det(const Matrix<Jet<R>>& m, int order) {
    return ring_det<Jet<R>>(m, Jet<R>(order), Jet<R>(order, R(1)));
}

// Division-free determinant of a matrix of jets (or of any ring elements):
// dynamic programming over column subsets, O(2^n * n) ring products.  Row i
// of the DP consumes one matrix row; D[S] accumulates signed products of a
// partial permanent-with-sign over the chosen columns.
template <class RingElem>
RingElem ring_det(const Matrix<RingElem>& m, const RingElem& zero, const RingElem& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    if (n > 20) throw TooLarge("ring determinant limited to 20 rows");
    std::vector<RingElem> dp(size_t(1) << n, zero);
    dp[0] = one;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        size_t row = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
        RingElem acc = zero;
        // Laplace expansion along the last used row: the cofactor sign is
        // (-1)^(row + position of col within the subset), so it flips once
        // per *member* column passed.
        int sign = (row % 2 == 0) ? 1 : -1;
        for (size_t col = 0; col < n; ++col) {
            if (!(mask & (size_t(1) << col))) continue;
            const RingElem& prev = dp[mask ^ (size_t(1) << col)];
            if (!(prev.is_zero() || m[row][col].is_zero())) {
                RingElem term = prev * m[row][col];
                if (sign < 0) {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            sign = -sign;
        }
        dp[mask] = acc;
    }
    return dp.back();
}

}  // namespace groves
