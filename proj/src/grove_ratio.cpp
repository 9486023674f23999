#include "groves/grove_ratio.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "groves/annular_matrix.hpp"
#include "groves/errors.hpp"
#include "groves/linalg.hpp"

namespace groves {

namespace {

using JetStore = std::map<std::pair<int, int>, std::pair<ExactValue, ExactValue>>;

void check_label(int n, int v) {
    if (v < 1 || v > n)
        throw std::invalid_argument("node label " + std::to_string(v) + " is outside 1.." +
                                    std::to_string(n));
}

void store_entry(JetStore& store, int n, int i, int j, const ExactValue& value,
                 const ExactValue& z_derivative) {
    check_label(n, i);
    check_label(n, j);
    if (i == j && !z_derivative.is_zero())
        throw std::invalid_argument("diagonal z-derivative must vanish");
    if (i <= j)
        store[{i, j}] = {value, z_derivative};
    else
        store[{j, i}] = {value, -z_derivative};
}

Jet<ExactValue> fetch_entry(const JetStore& store, int n, int i, int j, int order) {
    check_label(n, i);
    check_label(n, j);
    auto it = store.find({std::min(i, j), std::max(i, j)});
    if (it == store.end())
        throw Error("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") was never set");
    Jet<ExactValue> out(order, it->second.first);
    if (order >= 1 && i != j) {
        // Entry as a series in e = zeta - 1: since zeta = z^2, the linear
        // coefficient is half the z-derivative.
        ExactValue d = it->second.second;
        if (i > j) d = -d;
        out[1] = ExactValue(Rational(1, 2)) * d;
    }
    return out;
}

// sigma broken into its paired support (to be relabeled 1..m), singleton and
// unlisted complements, and the canonically directed relabeled pairing.
struct SigmaLayout {
    std::vector<int> support;
    std::vector<int> singletons;
    std::vector<int> unlisted;
    DirectedPairing canonical;
    bool embeddable = true;
};

int cut_position(int m, int h, int x) { return (x - h - 1 + (m - 1)) % (m - 1); }

SigmaLayout analyze(const PartialPairing& sigma) {
    const int n = sigma.n;
    if (n < 2) throw std::invalid_argument("annular pairings need at least two nodes");
    std::vector<char> seen(n + 1, 0);
    auto claim = [&](int v) {
        check_label(n, v);
        if (seen[v]) throw std::invalid_argument("node " + std::to_string(v) + " listed twice");
        seen[v] = 1;
    };
    SigmaLayout lay;
    for (const auto& [a, b] : sigma.pairs) {
        if (a == b) throw std::invalid_argument("a pair cannot join a node to itself");
        claim(a);
        claim(b);
        lay.support.push_back(a);
        lay.support.push_back(b);
    }
    for (int v : sigma.singletons) {
        claim(v);
        lay.singletons.push_back(v);
    }
    for (int v : sigma.unlisted) {
        claim(v);
        lay.unlisted.push_back(v);
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v])
            throw std::invalid_argument("node " + std::to_string(v) +
                                        " is neither paired, singleton, nor unlisted");
    std::sort(lay.support.begin(), lay.support.end());
    std::sort(lay.singletons.begin(), lay.singletons.end());
    std::sort(lay.unlisted.begin(), lay.unlisted.end());
    if (lay.support.empty() || lay.support.back() != n)
        throw std::invalid_argument("node n must belong to a pair");

    // Relabel the support to 1..m; the zipper still runs between the
    // relabeled nodes m-1 and 1, and node n becomes m.
    const int m = static_cast<int>(lay.support.size());
    auto relabel = [&](int v) {
        return static_cast<int>(std::lower_bound(lay.support.begin(), lay.support.end(), v) -
                                lay.support.begin()) +
               1;
    };
    int h = 0;
    for (const auto& [a, b] : sigma.pairs) {
        const int lo = std::min(relabel(a), relabel(b));
        if (std::max(relabel(a), relabel(b)) == m) h = lo;
    }
    // Canonical direction: destination is the numerically smaller endpoint
    // unless the pair separates h from m along the inner boundary, in which
    // case the pair crosses the zipper and the larger endpoint receives.
    std::vector<std::pair<int, int>> directed;
    for (const auto& [a, b] : sigma.pairs) {
        const int lo = std::min(relabel(a), relabel(b));
        const int hi = std::max(relabel(a), relabel(b));
        if (hi == m) continue;
        if (lo < h && h < hi)
            directed.emplace_back(hi, lo);
        else
            directed.emplace_back(lo, hi);
    }
    std::sort(directed.begin(), directed.end(), [&](const auto& x, const auto& y) {
        return cut_position(m, h, x.first) < cut_position(m, h, y.first);
    });
    directed.emplace_back(h, m);
    lay.canonical = DirectedPairing{m, std::move(directed)};
    lay.embeddable = annular_embeddable(lay.canonical);
    return lay;
}

// Row of the inverted connection system expanded around zeta = 1: pole is
// the largest pole order across the row and beta[j][t] the e^t coefficient
// of (1 - zeta)^pole * inverse[row][j].
struct RowExpansion {
    int pole = 0;
    std::vector<std::vector<Rational>> beta;
};

RowExpansion expand_row(const Matrix<RatFuncZ>& inv, size_t row) {
    const auto& alpha = inv[row];
    RowExpansion ex;
    for (const auto& a : alpha) ex.pole = std::max(ex.pole, ratfunc_expand_at_one(a, 0).first);
    ex.beta.resize(alpha.size());
    for (size_t j = 0; j < alpha.size(); ++j) {
        const auto [pj, coeffs] = ratfunc_expand_at_one(alpha[j], ex.pole);
        auto& b = ex.beta[j];
        b.assign(ex.pole + 1, Rational(0));
        // (1 - zeta)^pole = (-e)^pole shifts the series up by pole and
        // contributes the parity sign.
        for (int t = 0; t <= ex.pole; ++t) {
            const int idx = t - ex.pole + pj;
            if (idx < 0 || idx >= static_cast<int>(coeffs.size())) continue;
            b[t] = ex.pole % 2 ? -coeffs[idx] : coeffs[idx];
        }
    }
    return ex;
}

// Shared evaluation pipeline.  entry(i, j, order) supplies the jet of the
// (i, j) entry of the response or substituted Green matrix in the graph's
// original labels; tail lists the labels adjoined after the relabeled row
// and column blocks.  Returns the grove ratio at trivial monodromy.
template <class Ring, class EntryFn>
Ring assemble(const PartialPairing& sigma, const SigmaLayout& lay, const std::vector<int>& tail,
              EntryFn&& entry) {
    const int m = static_cast<int>(lay.support.size());
    const AnnularMatrix& sys = build_An(m);
    const Matrix<RatFuncZ>& inv = invert_An(m);
    const auto col_it = std::find(sys.cols.begin(), sys.cols.end(), lay.canonical);
    if (col_it == sys.cols.end())
        throw Error("canonical pairing missing from the connection system");
    const RowExpansion ex = expand_row(inv, static_cast<size_t>(col_it - sys.cols.begin()));
    const int pole = ex.pole;
    const size_t half = static_cast<size_t>(m / 2);
    const size_t dim = half + tail.size();

    Jet<Ring> total(pole);
    for (size_t j = 0; j < sys.rows.size(); ++j) {
        bool zero_row = true;
        for (const auto& c : ex.beta[j])
            if (!c.is_zero()) {
                zero_row = false;
                break;
            }
        if (zero_row) continue;
        const RowIndex& lbl = sys.rows[j];
        Matrix<Jet<Ring>> mat(dim, std::vector<Jet<Ring>>(dim, Jet<Ring>(pole)));
        for (size_t r = 0; r < dim; ++r) {
            const int row_node = r < half ? lay.support[lbl.R[r] - 1] : tail[r - half];
            for (size_t c = 0; c < dim; ++c) {
                const int col_node = c < half ? lay.support[lbl.S[c] - 1] : tail[c - half];
                mat[r][c] = entry(row_node, col_node, pole);
            }
        }
        std::vector<Ring> coeffs;
        coeffs.reserve(ex.beta[j].size());
        for (const auto& c : ex.beta[j]) coeffs.emplace_back(c);
        total += Jet<Ring>(std::move(coeffs)) * jet_det(mat, pole);
    }

    for (int t = 0; t < pole; ++t)
        if (!total[t].is_zero())
            throw PrefixNotZero("grove expansion for " + sigma.str() + ": the order-" +
                                std::to_string(t) + " coefficient fails to cancel");
    Ring out = total[pole];
    if (pole % 2) out = -out;
    return out;
}

}  // namespace

ResponseJetTable::ResponseJetTable(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("jet tables need at least two nodes");
}

void ResponseJetTable::set(int i, int j, const ExactValue& value, const ExactValue& z_derivative) {
    store_entry(entries_, n_, i, j, value, z_derivative);
}

Jet<ExactValue> ResponseJetTable::jet(int i, int j, int order) const {
    return fetch_entry(entries_, n_, i, j, order);
}

GreenJetTable::GreenJetTable(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("jet tables need at least two nodes");
}

void GreenJetTable::set(int i, int j, const ExactValue& value, const ExactValue& z_derivative) {
    if (i == n_ || j == n_)
        throw std::invalid_argument("row and column n of the substituted matrix are fixed");
    store_entry(entries_, n_, i, j, value, z_derivative);
}

Jet<ExactValue> GreenJetTable::jet(int i, int j, int order) const {
    check_label(n_, i);
    check_label(n_, j);
    if (i == n_) throw std::invalid_argument("row n of the substituted matrix is never read");
    if (j == n_) return Jet<ExactValue>(order, ExactValue(1));
    return fetch_entry(entries_, n_, i, j, order);
}

ExactValue grove_ratio(const PartialPairing& sigma, const ResponseJetTable& table) {
    if (table.n() != sigma.n)
        throw std::invalid_argument("table was built for a different node count");
    const SigmaLayout lay = analyze(sigma);
    if (!lay.embeddable) return ExactValue();
    // Turning a node interior adjoins it to the row and column sets of every
    // minor and flips the overall sign once.
    ExactValue out = assemble<ExactValue>(
        sigma, lay, lay.unlisted, [&](int i, int j, int ord) { return table.jet(i, j, ord); });
    if (lay.unlisted.size() % 2) out = -out;
    return out;
}

ExactValue grove_ratio(const PartialPairing& sigma, const GreenJetTable& table) {
    if (table.n() != sigma.n)
        throw std::invalid_argument("table was built for a different node count");
    const SigmaLayout lay = analyze(sigma);
    if (!lay.embeddable) return ExactValue();
    // Only singleton nodes are adjoined to the minors here.  Interior nodes need
    // no representation at all: complementing the row/column sets of the
    // substituted minors turns each interior node's row-and-column augmentation
    // into plain absence, and the sign it carried cancels against the response
    // form's interior-node sign.
    return assemble<ExactValue>(sigma, lay, lay.singletons,
                                [&](int i, int j, int ord) { return table.jet(i, j, ord); });
}

MultiPoly grove_polynomial(const PartialPairing& sigma, GroveBasis basis) {
    const SigmaLayout lay = analyze(sigma);
    if (!lay.unlisted.empty())
        throw std::invalid_argument("symbolic grove polynomials need every node listed");
    if (basis == GroveBasis::G && !lay.singletons.empty())
        throw std::invalid_argument("the Green-basis polynomial needs a complete pairing");
    if (!lay.embeddable) return MultiPoly();
    const int n = sigma.n;
    const MultiPoly half(Rational(1, 2));
    if (basis == GroveBasis::L) {
        return assemble<MultiPoly>(sigma, lay, {}, [&](int i, int j, int ord) {
            Jet<MultiPoly> e(ord, MultiPoly::generator(SymKind::L, i, j));
            if (ord >= 1) e[1] = half * MultiPoly::generator(SymKind::Lprime, i, j);
            return e;
        });
    }
    return assemble<MultiPoly>(sigma, lay, {}, [&](int i, int j, int ord) {
        if (j == n) return Jet<MultiPoly>(ord, MultiPoly(1));
        Jet<MultiPoly> e(ord, MultiPoly::generator(SymKind::G, i, j));
        if (ord >= 1) e[1] = half * MultiPoly::generator(SymKind::Gprime, i, j);
        return e;
    });
}

ExactValue crossing_probability_20(const Jet<ExactValue>& weight) {
    if (weight.order() < 1) throw Error("crossing probability needs a first-order jet");
    if (weight[0].is_zero()) throw ZeroConstantTerm();
    return weight[1] / weight[0];
}

ExactValue expected_winding(const PartialPairing& sigma, const Jet<ExactValue>& numerator,
                            const Jet<ExactValue>& denominator) {
    analyze(sigma);
    if (numerator.order() < 1 || denominator.order() < 1)
        throw Error("expected winding needs first-order jets");
    if (numerator[0].is_zero() || denominator[0].is_zero()) throw ZeroConstantTerm();
    return numerator[1] / numerator[0] - denominator[1] / denominator[0];
}

}  // namespace groves
