#include "groves/linalg.hpp"

namespace groves {

namespace {

// Shared forward pass: fraction-free elimination of the n x cols augmented
// matrix m (first n columns = A).  Returns the sign of the row permutation.
// After it returns, m[k][k] for k < n is the k+1-st leading principal minor
// of the permuted A (Bareiss pivots), and rows are upper triangular in the
// first n columns.
int bareiss_forward(Matrix<PolyZ>& m, size_t n) {
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        // Any nonzero pivot works; the lowest-degree one keeps products small.
        size_t best = n;
        for (size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (best == n || m[i][k].degree() < m[best][k].degree()) best = i;
        }
        if (best == n) throw SingularMatrix();
        if (best != k) {
            std::swap(m[best], m[k]);
            sign = -sign;
        }
        if (k + 1 == n) break;
        const PolyZ prev = (k == 0) ? PolyZ(1) : m[k - 1][k - 1];
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < m[i].size(); ++j) {
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = PolyZ();
        }
    }
    return sign;
}

}  // namespace

Matrix<RatFuncZ> bareiss_solve(const Matrix<PolyZ>& a, const Matrix<PolyZ>& b) {
    const size_t n = a.size();
    if (n == 0) return {};
    if (b.size() != n) throw Error("bareiss_solve: row count mismatch");
    const size_t p = b[0].size();

    Matrix<PolyZ> m(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("bareiss_solve: matrix not square");
        m[i] = a[i];
        m[i].insert(m[i].end(), b[i].begin(), b[i].end());
    }
    bareiss_forward(m, n);

    // Back substitution scaled by the final pivot d = m[n-1][n-1] (= +-det up
    // to the permutation sign): with y_i = x_i * d, every y_i is a polynomial
    // (a Cramer minor), and each division below is exact.
    const PolyZ& d = m[n - 1][n - 1];
    Matrix<RatFuncZ> x(n, std::vector<RatFuncZ>(p));
    std::vector<std::vector<PolyZ>> y(n, std::vector<PolyZ>(p));
    for (size_t c = 0; c < p; ++c) {
        for (size_t ii = n; ii-- > 0;) {
            PolyZ acc = m[ii][n + c] * d;
            for (size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * y[j][c];
            y[ii][c] = divexact(acc, m[ii][ii]);
            x[ii][c] = RatFuncZ(y[ii][c], d);
        }
    }
    return x;
}

PolyZ bareiss_det(Matrix<PolyZ> a) {
    const size_t n = a.size();
    if (n == 0) return PolyZ(1);
    int sign;
    try {
        sign = bareiss_forward(a, n);
    } catch (const SingularMatrix&) {
        return PolyZ();
    }
    PolyZ det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace groves
