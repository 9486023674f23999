#include "groves/cutgraph.hpp"

#include <algorithm>
#include <string>

#include "groves/errors.hpp"
#include "groves/potential_kernel.hpp"
#include "groves/zipper_derivative.hpp"

namespace groves {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

bool same_edge(const std::pair<Point, Point>& e, Point s, Point t) {
    return (e.first == s && e.second == t) || (e.first == t && e.second == s);
}

}  // namespace

bool CutContext::contains(Point p) const {
    return std::find(window_.begin(), window_.end(), p) != window_.end();
}

size_t CutContext::index(Point p) const {
    for (size_t i = 0; i < window_.size(); ++i)
        if (window_[i] == p) return i;
    throw Error("vertex " + point_str(p) + " is outside the context window");
}

ExactValue CutContext::green(Point u, Point v) const { return g_[index(u)][index(v)]; }

ExactValue CutContext::green_prime(Point u, Point v) const {
    return gp_[index(u)][index(v)];
}

bool CutContext::edge_present(Point s, Point t) const {
    auto nb = lattice_neighbors(lat_, s);
    if (std::find(nb.begin(), nb.end(), t) == nb.end()) return false;
    for (const auto& e : cuts_)
        if (same_edge(e, s, t)) return false;
    return true;
}

std::vector<Point> CutContext::neighbors(Point p) const {
    std::vector<Point> out;
    for (Point w : lattice_neighbors(lat_, p))
        if (edge_present(p, w)) out.push_back(w);
    return out;
}

CutContext fresh_context(LatticeKind lat, const std::vector<Point>& window) {
    CutContext ctx;
    ctx.lat_ = lat;
    ctx.window_ = window;
    const size_t n = window.size();
    for (size_t i = 0; i < n; ++i) {
        if (!is_site(lat, window[i]))
            throw Error("window point " + point_str(window[i]) + " is not a lattice site");
        for (size_t j = i + 1; j < n; ++j)
            if (window[i] == window[j])
                throw Error("window repeats vertex " + point_str(window[i]));
    }
    int span = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            span = std::max(span, lattice_norm(lat, window[i] - window[j]));
    int kernel_window = std::max(64, span + 2);
    ctx.g_.assign(n, std::vector<ExactValue>(n));
    ctx.gp_.assign(n, std::vector<ExactValue>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            ctx.g_[i][j] = gbar(lat, window[i], window[j], kernel_window);
            if (j < i) ctx.gp_[i][j] = -ctx.gp_[j][i];  // antisymmetry for free
            else if (j > i) ctx.gp_[i][j] = gbar_prime(lat, window[i], window[j]);
        }
    }
    return ctx;
}

ExactValue cut_kernel_pair(Matrix<ExactValue>& g, Matrix<ExactValue>* gp,
                           size_t s, size_t t, const Rational& c, int tau_prime) {
    if (c == Rational(0)) return ExactValue(1);  // vanishing edge: nothing to remove
    const size_t n = g.size();
    ExactValue spread = g[s][s] + g[t][t] - g[s][t] - g[s][t];
    ExactValue a = spread - ExactValue(Rational(1) / c);
    if (a.is_zero())
        throw DegenerateCut("edge is forced (present in every spanning tree)");
    ExactValue ratio = ExactValue(1) - ExactValue(c) * spread;

    std::vector<ExactValue> d(n);
    for (size_t u = 0; u < n; ++u) d[u] = g[u][s] - g[u][t];

    if (gp) {
        // Differentiating a_{s,t} in the deformation parameter gives
        // gp_st + gp_ts (the transport terms cancel), which antisymmetry
        // makes zero; verify instead of assuming.
        if (!((*gp)[s][t] + (*gp)[t][s]).is_zero())
            throw Error("kernel derivative lost antisymmetry at the cut edge");
        ExactValue tp = ExactValue(tau_prime);
        std::vector<ExactValue> l(n), r(n);
        for (size_t u = 0; u < n; ++u) {
            l[u] = (*gp)[u][s] - (*gp)[u][t] + g[u][t] * tp;
            r[u] = (*gp)[s][u] - (*gp)[t][u] - g[t][u] * tp;
        }
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                (*gp)[u][v] -= (l[u] * d[v] + d[u] * r[v]) / a;
    }
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) g[u][v] -= d[u] * d[v] / a;
    return ratio;
}

CutContext cut_edge(const CutContext& ctx, Point s, Point t, const Rational& conductance) {
    if (!ctx.contains(s) || !ctx.contains(t))
        throw InvalidCutSet("cut endpoint " +
                            point_str(ctx.contains(s) ? t : s) + " is outside the window");
    auto nb = lattice_neighbors(ctx.lat_, s);
    if (std::find(nb.begin(), nb.end(), t) == nb.end())
        throw InvalidCutSet("{" + point_str(s) + "," + point_str(t) +
                            "} is not a lattice edge");
    for (const auto& e : ctx.cuts_)
        if (same_edge(e, s, t))
            throw InvalidCutSet("edge {" + point_str(s) + "," + point_str(t) +
                                "} was already cut");
    CutContext out = ctx;
    if (conductance == Rational(0)) return out;  // continuous limit: no-op
    // The derivative of the transport "to s from t" at z = 1; the canonical
    // marked direction carries z^{-1} in that convention.
    int tau_prime = -zipper_transport(ctx.lat_, s, t);
    ExactValue ratio = cut_kernel_pair(out.g_, &out.gp_, out.index(s), out.index(t),
                                       conductance, tau_prime);
    out.zratio_ = out.zratio_ * ratio;
    out.cuts_.emplace_back(s, t);
    return out;
}

bool equivalent(const CutContext& a, const CutContext& b) {
    if (a.lattice() != b.lattice() || a.window() != b.window()) return false;
    if (a.cuts().size() != b.cuts().size()) return false;
    for (const auto& e : a.cuts()) {
        bool found = false;
        for (const auto& f : b.cuts())
            if (same_edge(f, e.first, e.second)) found = true;
        if (!found) return false;
    }
    if (!(a.z_ratio() == b.z_ratio())) return false;
    for (Point u : a.window())
        for (Point v : a.window())
            if (!(a.green(u, v) == b.green(u, v) &&
                  a.green_prime(u, v) == b.green_prime(u, v)))
                return false;
    return true;
}

}  // namespace groves
