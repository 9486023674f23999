#include <vector>

#include "doctest.h"
#include "groves/annular_matrix.hpp"
#include "groves/errors.hpp"
#include "groves/linalg.hpp"
#include "groves/pairings.hpp"
#include "groves/polyz.hpp"

using namespace groves;

namespace {

DirectedPairing dp(int n, std::vector<std::pair<int, int>> pairs) {
    return DirectedPairing{n, std::move(pairs)};
}

PolyZ pz(std::vector<long> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return PolyZ(std::move(c));
}

// Compact code for system entries, which are all single signed monomials:
// 0 -> 0, +-1 -> +-1, +-2 -> +-zeta, +-3 -> +-zeta^2.
PolyZ mono(int code) {
    if (code == 0) return PolyZ();
    const int sign = code > 0 ? 1 : -1;
    return PolyZ::monomial(std::abs(code) - 1, Rational(sign));
}

Matrix<PolyZ> decode(const std::vector<std::vector<int>>& codes) {
    Matrix<PolyZ> m;
    for (const auto& row : codes) {
        m.emplace_back();
        for (int c : row) m.back().push_back(mono(c));
    }
    return m;
}

long binom(int n, int k) {
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// Expected determinant degree: the number of zeta-carrying permutation terms
// the system discards, i.e. 2^(n-2) minus the system size.
int det_degree(int n) { return (1 << (n - 2)) - static_cast<int>(binom(n, n / 2) / 2); }

PolyZ one_minus_zeta_pow(int k) {
    PolyZ p(1);
    const PolyZ base = PolyZ(1) - PolyZ::variable();
    for (int t = 0; t < k; ++t) p *= base;
    return p;
}

const std::vector<DirectedPairing> kSixColumns = {
    dp(6, {{1, 2}, {3, 4}, {5, 6}}), dp(6, {{1, 4}, {2, 3}, {5, 6}}),
    dp(6, {{5, 1}, {2, 3}, {4, 6}}), dp(6, {{5, 3}, {1, 2}, {4, 6}}),
    dp(6, {{4, 5}, {1, 2}, {3, 6}}), dp(6, {{4, 2}, {5, 1}, {3, 6}}),
    dp(6, {{3, 4}, {5, 1}, {2, 6}}), dp(6, {{3, 1}, {4, 5}, {2, 6}}),
    dp(6, {{2, 3}, {4, 5}, {1, 6}}), dp(6, {{2, 5}, {3, 4}, {1, 6}}),
};

const std::vector<RowIndex> kSixRows = {
    {{1, 3, 5}, {2, 4, 6}}, {{1, 2, 5}, {4, 3, 6}}, {{5, 2, 4}, {1, 3, 6}},
    {{5, 1, 4}, {3, 2, 6}}, {{4, 1, 3}, {5, 2, 6}}, {{4, 5, 3}, {2, 1, 6}},
    {{3, 5, 2}, {4, 1, 6}}, {{3, 4, 2}, {1, 5, 6}}, {{2, 4, 1}, {3, 5, 6}},
    {{2, 3, 1}, {5, 4, 6}},
};

const std::vector<std::vector<int>> kSixEntries = {
    {1, -1, 0, 0, -1, 0, 0, 0, 1, -1}, {0, 1, 0, 0, 0, 0, 0, 2, -1, 0},
    {1, -1, 1, -1, 0, 0, -1, 0, 0, 0}, {-1, 0, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 2, -2, 1, -2, 0, 0, -1, 0}, {0, 1, -1, 0, 0, 1, 0, 0, 0, 0},
    {-1, 0, 0, 0, 1, -2, 1, -1, 0, 0}, {0, 0, 0, 2, -1, 0, 0, 1, 0, 0},
    {0, 0, -2, 0, 0, 0, 2, -2, 1, -1}, {0, 0, 0, 0, 0, 3, -2, 0, 0, 1},
};

// Numerators of the six-node inverse over the common denominator (1-zeta)^2,
// as coefficient vectors in zeta.
const std::vector<std::vector<std::vector<long>>> kSixInverse = {
    {{1, 1}, {1, 1}, {0, 1, 1}, {0, 2}, {1, 1}, {0, 1, 1}, {0, 2}, {0, 2}, {1, 1}, {2}},
    {{0, 1}, {1}, {0, 1}, {0, 1}, {0, 1}, {0, 0, 1}, {0, 1}, {0, 1}, {1}, {1}},
    {{1, 1}, {2}, {1, 1}, {1, 1}, {1, 1}, {0, 2}, {1, 1}, {1, 1}, {2}, {2}},
    {{1}, {1}, {0, 1}, {1}, {1}, {0, 1}, {0, 1}, {0, 1}, {1}, {1}},
    {{0, 2}, {0, 2}, {0, 1, 1}, {0, 2}, {1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 2}, {1, 1}, {1, 1}},
    {{1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}},
    {{1, 1}, {1, 1}, {0, 2}, {0, 2}, {1, 1}, {0, 2}, {1, 1}, {1, 1}, {1, 1}, {2}},
    {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1}, {0, 1}, {0, 1}, {1}, {1}, {1}},
    {{0, 1, 1}, {0, 2}, {0, 1, 1}, {0, 1, 1}, {0, 2}, {0, 0, 2}, {0, 1, 1}, {0, 2}, {1, 1}, {1, 1}},
    {{0, 1}, {0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 1}, {0, 0, 1}, {0, 1}, {0, 1}, {0, 1}, {1}},
};

int max_row_pole(const Matrix<RatFuncZ>& inv, size_t row) {
    int pole = 0;
    for (const auto& e : inv[row]) pole = std::max(pole, ratfunc_expand_at_one(e, 0).first);
    return pole;
}

}  // namespace

TEST_CASE("connection system fixtures for two, four, and six nodes") {
    const AnnularMatrix& a2 = build_An(2);
    CHECK(a2.n == 2);
    CHECK(a2.rows == std::vector<RowIndex>{{{1}, {2}}});
    CHECK(a2.cols == std::vector<DirectedPairing>{dp(2, {{1, 2}})});
    CHECK(a2.entries == decode({{1}}));

    const AnnularMatrix& a4 = build_An(4);
    CHECK(a4.rows == std::vector<RowIndex>{{{1, 3}, {2, 4}}, {{3, 2}, {1, 4}}, {{2, 1}, {3, 4}}});
    CHECK(a4.cols == std::vector<DirectedPairing>{dp(4, {{1, 2}, {3, 4}}), dp(4, {{3, 1}, {2, 4}}),
                                                  dp(4, {{2, 3}, {1, 4}})});
    CHECK(a4.entries == decode({{1, 0, -1}, {-1, 1, 0}, {0, -2, 1}}));

    const AnnularMatrix& a6 = build_An(6);
    CHECK(a6.rows == kSixRows);
    CHECK(a6.cols == kSixColumns);
    CHECK(a6.entries == decode(kSixEntries));
}

TEST_CASE("inverse fixtures for two, four, and six nodes") {
    CHECK(invert_An(2) == Matrix<RatFuncZ>{{RatFuncZ(1)}});

    const PolyZ d1 = one_minus_zeta_pow(1);
    const std::vector<std::vector<std::vector<long>>> four = {
        {{1}, {0, 1}, {1}}, {{1}, {1}, {1}}, {{0, 1}, {0, 1}, {1}}};
    const Matrix<RatFuncZ>& i4 = invert_An(4);
    REQUIRE(i4.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(i4[i][j] == RatFuncZ(pz(four[i][j]), d1));

    const PolyZ d2 = one_minus_zeta_pow(2);
    const Matrix<RatFuncZ>& i6 = invert_An(6);
    REQUIRE(i6.size() == 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) CHECK(i6[i][j] == RatFuncZ(pz(kSixInverse[i][j]), d2));
}

TEST_CASE("inverse times system is the identity") {
    for (int n : {2, 4, 6, 8}) {
        const AnnularMatrix& a = build_An(n);
        const Matrix<RatFuncZ>& inv = invert_An(n);
        const size_t dim = a.entries.size();
        REQUIRE(inv.size() == dim);
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) {
                RatFuncZ acc;
                for (size_t k = 0; k < dim; ++k)
                    if (!a.entries[k][j].is_zero()) acc += inv[i][k] * RatFuncZ(a.entries[k][j]);
                CHECK(acc == RatFuncZ(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("system determinant is the expected power of one minus zeta") {
    for (int n : {2, 4, 6, 8}) {
        const AnnularMatrix& a = build_An(n);
        const PolyZ det = bareiss_det(a.entries);
        const int deg = det_degree(n);
        CHECK(det.eval(Rational(0)) == Rational(1));
        CHECK(det.degree() == deg);
        CHECK((det.leading() == Rational(1) || det.leading() == Rational(-1)));
        CHECK(det == one_minus_zeta_pow(deg));
    }
}

TEST_CASE("each column holds one nonzero per subset of reversible pairs") {
    for (int n : {2, 4, 6, 8}) {
        const AnnularMatrix& a = build_An(n);
        const size_t dim = a.entries.size();
        for (size_t j = 0; j < dim; ++j) {
            int nonzero = 0;
            for (size_t i = 0; i < dim; ++i)
                if (!a.entries[i][j].is_zero()) ++nonzero;
            CHECK(nonzero == (1 << (n / 2 - 1)));
        }
    }
}

TEST_CASE("scaled inverse entries are nonnegative integer polynomials") {
    for (int n : {4, 6, 8}) {
        const Matrix<RatFuncZ>& inv = invert_An(n);
        const RatFuncZ scale{one_minus_zeta_pow(n / 2 - 1)};
        long fact = 1;
        for (int t = 2; t <= n / 2 - 1; ++t) fact *= t;
        for (const auto& row : inv) {
            for (const auto& e : row) {
                const RatFuncZ q = e * scale;
                CHECK(q.den() == PolyZ(1));
                CHECK(q.num().degree() <= n / 2 - 1);
                for (const auto& c : q.num().coeffs()) {
                    CHECK(c.denominator() == 1);
                    CHECK(c >= Rational(0));
                }
                const Rational at_one = q.num().eval(Rational(1));
                CHECK(at_one.denominator() == 1);
                if (!at_one.is_zero()) CHECK((Rational(fact) / at_one).denominator() == 1);
            }
        }
    }
}

TEST_CASE("row pole orders stay within the grove bound") {
    for (int n : {2, 4, 6, 8}) {
        const Matrix<RatFuncZ>& inv = invert_An(n);
        for (size_t i = 0; i < inv.size(); ++i) CHECK(max_row_pole(inv, i) <= n / 2 - 1);
    }
}

TEST_CASE("ten-node system inverts with a verified product") {
    const AnnularMatrix& a = build_An(10);
    const Matrix<RatFuncZ>& inv = invert_An(10);
    REQUIRE(a.entries.size() == 126);
    REQUIRE(inv.size() == 126);

    // Spot-check the product on a deterministic index sample.
    const std::vector<size_t> picks = {0, 1, 37, 63, 88, 125};
    for (size_t i : picks) {
        for (size_t j : picks) {
            RatFuncZ acc;
            for (size_t k = 0; k < 126; ++k)
                if (!a.entries[k][j].is_zero()) acc += inv[i][k] * RatFuncZ(a.entries[k][j]);
            CHECK(acc == RatFuncZ(i == j ? 1 : 0));
        }
    }
    for (size_t i : picks) CHECK(max_row_pole(inv, i) <= 4);
}

TEST_CASE("size limits and invalid node counts are rejected") {
    CHECK_THROWS_AS(invert_An(12), TooLarge);
    CHECK_THROWS_AS(build_An(3), Error);
    CHECK_THROWS_AS(build_An(0), Error);
    CHECK_THROWS_AS(build_An(-2), Error);
}

TEST_CASE("cached systems hand back stable references") {
    const AnnularMatrix* a = &build_An(4);
    CHECK(a == &build_An(4));
    const Matrix<RatFuncZ>* i = &invert_An(4);
    CHECK(i == &invert_An(4));
}
