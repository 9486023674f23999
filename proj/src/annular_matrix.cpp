#include "groves/annular_matrix.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "groves/errors.hpp"

namespace groves {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int s = 1;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) s = -s;
    return s;
}

// The unique expansion term of det L_R^S whose connection type is the
// annular pairing `col`, as a signed power of zeta.  Zero when some pair of
// `col` has both endpoints among the rows R or both among the columns S: such
// a term cannot occur in the minor.
PolyZ system_entry(const RowIndex& row, const DirectedPairing& col) {
    const int n = col.n;
    const int half = n / 2;
    std::vector<int> rpos(n + 1, -1), spos(n + 1, -1);
    for (int k = 0; k < half; ++k) rpos[row.R[k]] = k;
    for (int k = 0; k < half; ++k) spos[row.S[k]] = k;
    const int h = col.pairs.back().first;  // partner of node n; the n-pair is last
    std::vector<int> perm(half, -1);
    int crossings = 0;
    for (const auto& [dest, src] : col.pairs) {
        if (rpos[dest] >= 0 && spos[src] >= 0) {
            perm[rpos[dest]] = spos[src];
        } else if (rpos[src] >= 0 && spos[dest] >= 0) {
            // The minor term runs this pair against its canonical direction;
            // when the pair crosses the zipper that reversal costs a factor
            // of zeta.  Pairs cross exactly when they separate h from n,
            // i.e. when one endpoint sits on each side of h along the cut
            // inner boundary; the pair containing n never crosses.
            perm[rpos[src]] = spos[dest];
            const int lo = std::min(dest, src), hi = std::max(dest, src);
            if (lo < h && h < hi) ++crossings;
        } else {
            return PolyZ();
        }
    }
    return PolyZ::monomial(crossings, Rational(permutation_sign(perm)));
}

std::unique_ptr<AnnularMatrix> make_system(int n) {
    auto out = std::make_unique<AnnularMatrix>();
    out->n = n;
    out->cols = enumerate_annular_pairings(n);
    out->rows.reserve(out->cols.size());
    for (const auto& col : out->cols) out->rows.push_back(cycle_lemma_backward(col));
    const size_t dim = out->cols.size();
    out->entries.assign(dim, std::vector<PolyZ>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            out->entries[i][j] = system_entry(out->rows[i], out->cols[j]);
    return out;
}

Matrix<RatFuncZ> invert_dense(const AnnularMatrix& a) {
    return bareiss_solve(a.entries, identity_matrix<PolyZ>(a.entries.size()));
}

// Faster route for the larger systems: evaluate the system at n/2 rational
// points, invert each rational matrix exactly, interpolate
// (1 - zeta)^(n/2 - 1) * A^{-1} entrywise as polynomials of degree
// <= n/2 - 1, and confirm A * X = (1 - zeta)^(n/2 - 1) * I by exact
// polynomial multiplication.  The polynomial ansatz is the structure
// observed on the small systems; the final identity check is what makes the
// result unconditional.  Any failure falls back to dense elimination.
Matrix<RatFuncZ> invert_structured(const AnnularMatrix& a) {
    const size_t dim = a.entries.size();
    const int ord = a.n / 2 - 1;

    std::vector<Rational> pts;
    for (int t = 0; t <= ord; ++t) pts.emplace_back(t + 2);  // stay clear of zeta = 1

    std::vector<Matrix<Rational>> vals;
    try {
        for (const auto& pt : pts) {
            Matrix<PolyZ> at_pt(dim, std::vector<PolyZ>(dim));
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j)
                    if (!a.entries[i][j].is_zero()) at_pt[i][j] = PolyZ(a.entries[i][j].eval(pt));
            Matrix<RatFuncZ> inv_pt = bareiss_solve(at_pt, identity_matrix<PolyZ>(dim));
            Rational scale(1);
            for (int t = 0; t < ord; ++t) scale = scale * (Rational(1) - pt);
            Matrix<Rational> v(dim, std::vector<Rational>(dim));
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j)
                    v[i][j] = scale * inv_pt[i][j].num().coeff(0) / inv_pt[i][j].den().coeff(0);
            vals.push_back(std::move(v));
        }
    } catch (const SingularMatrix&) {
        return invert_dense(a);
    }

    std::vector<PolyZ> lagrange;
    for (size_t p = 0; p < pts.size(); ++p) {
        PolyZ basis(1);
        Rational denom(1);
        for (size_t q = 0; q < pts.size(); ++q) {
            if (q == p) continue;
            basis *= PolyZ::variable() - PolyZ(pts[q]);
            denom = denom * (pts[p] - pts[q]);
        }
        basis *= PolyZ(Rational(1) / denom);
        lagrange.push_back(std::move(basis));
    }

    Matrix<PolyZ> x(dim, std::vector<PolyZ>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t p = 0; p < pts.size(); ++p)
                if (!vals[p][i][j].is_zero()) x[i][j] += lagrange[p] * PolyZ(vals[p][i][j]);

    PolyZ target(1);
    const PolyZ one_minus_zeta = PolyZ(1) - PolyZ::variable();
    for (int t = 0; t < ord; ++t) target *= one_minus_zeta;

    for (size_t i = 0; i < dim; ++i) {
        std::vector<PolyZ> acc(dim);
        for (size_t k = 0; k < dim; ++k) {
            const PolyZ& e = a.entries[i][k];
            if (e.is_zero()) continue;
            for (size_t j = 0; j < dim; ++j)
                if (!x[k][j].is_zero()) acc[j] += e * x[k][j];
        }
        for (size_t j = 0; j < dim; ++j)
            if (acc[j] != (i == j ? target : PolyZ())) return invert_dense(a);
    }

    Matrix<RatFuncZ> inv(dim, std::vector<RatFuncZ>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) inv[i][j] = RatFuncZ(x[i][j], target);
    return inv;
}

}  // namespace

const AnnularMatrix& build_An(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<AnnularMatrix>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_system(n)).first;
    return *it->second;
}

const Matrix<RatFuncZ>& invert_An(int n) {
    if (n > kAnnularInversionCap)
        throw TooLarge("connection system inversion supports n <= " +
                       std::to_string(kAnnularInversionCap) + ", got n = " + std::to_string(n));
    const AnnularMatrix& a = build_An(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Matrix<RatFuncZ>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto inv = a.entries.size() <= 35 ? invert_dense(a) : invert_structured(a);
        it = cache.emplace(n, std::make_unique<Matrix<RatFuncZ>>(std::move(inv))).first;
    }
    return *it->second;
}

}  // namespace groves
