#include "groves/finite_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "groves/errors.hpp"

namespace groves {

// ---------------------------------------------------------------------------
// LaurentZ

LaurentZ LaurentZ::monomial(int k, const Rational& c) {
    LaurentZ out;
    out.add(k, c);
    return out;
}

void LaurentZ::add(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
        c_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Rational LaurentZ::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentZ::eval_one() const {
    Rational s;
    for (const auto& [k, c] : c_) s += c;
    return s;
}

LaurentZ LaurentZ::reciprocal_arg() const {
    LaurentZ out;
    for (const auto& [k, c] : c_) out.c_.emplace(-k, c);
    return out;
}

RatFuncZ LaurentZ::to_ratfunc() const {
    if (c_.empty()) return RatFuncZ();
    const int low = c_.begin()->first;
    const int high = c_.rbegin()->first;
    const int shift = low < 0 ? -low : 0;
    std::vector<Rational> num(static_cast<size_t>(high + shift) + 1);
    for (const auto& [k, c] : c_) num[static_cast<size_t>(k + shift)] = c;
    PolyZ den = shift > 0 ? PolyZ::monomial(shift) : PolyZ(Rational(1));
    return RatFuncZ(PolyZ(num), den);
}

LaurentZ LaurentZ::operator-() const {
    LaurentZ out;
    for (const auto& [k, c] : c_) out.c_.emplace(k, -c);
    return out;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
    for (const auto& [k, c] : o.c_) add(k, c);
    return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& o) {
    for (const auto& [k, c] : o.c_) add(k, -c);
    return *this;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ out;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) out.add(ka + kb, ca * cb);
    return out;
}

std::string LaurentZ::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first, matching the polynomial printer.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int k = it->first;
        const Rational& c = it->second;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (k == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "z";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// FiniteGraph

void validate_graph(const FiniteGraph& g) {
    if (g.vertex_count <= 0) throw ParseError("graph has no vertices");
    auto in_range = [&](int v) { return v >= 0 && v < g.vertex_count; };
    if (g.boundary >= 0 && !in_range(g.boundary))
        throw ParseError("boundary vertex out of range");
    std::vector<char> seen(static_cast<size_t>(g.vertex_count), 0);
    for (int v : g.nodes) {
        if (!in_range(v)) throw ParseError("node vertex out of range");
        if (seen[static_cast<size_t>(v)]) throw ParseError("duplicate node vertex");
        seen[static_cast<size_t>(v)] = 1;
    }
    for (const GraphEdge& e : g.edges) {
        if (!in_range(e.u) || !in_range(e.v)) throw ParseError("edge endpoint out of range");
        if (e.u == e.v) throw ParseError("self-loop edge");
        if (e.c.sign() <= 0) throw ParseError("edge conductance must be positive");
    }
    // Connectivity.
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count));
    for (const GraphEdge& e : g.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> vis(static_cast<size_t>(g.vertex_count), 0);
    std::queue<int> bfs;
    bfs.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[static_cast<size_t>(v)])
            if (!vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != g.vertex_count) throw ParseError("graph is not connected");
}

namespace {

// Bundle Laplacian scaled by z^shift so every entry is an honest polynomial:
// row v of z^shift * Delta(z).  shift is the largest |zip| over the edges.
Matrix<PolyZ> scaled_laplacian(const FiniteGraph& g, int* shift_out) {
    int shift = 0;
    for (const GraphEdge& e : g.edges) shift = std::max(shift, std::abs(e.zip));
    const size_t n = static_cast<size_t>(g.vertex_count);
    Matrix<PolyZ> m(n, std::vector<PolyZ>(n, PolyZ()));
    const PolyZ zshift = PolyZ::monomial(shift);
    for (const GraphEdge& e : g.edges) {
        const size_t u = static_cast<size_t>(e.u), v = static_cast<size_t>(e.v);
        // Delta[u][v] = -c z^{-zip}, Delta[v][u] = -c z^{+zip}.
        m[u][v] -= PolyZ::monomial(shift - e.zip, e.c);
        m[v][u] -= PolyZ::monomial(shift + e.zip, e.c);
        m[u][u] += PolyZ::monomial(shift, e.c);
        m[v][v] += PolyZ::monomial(shift, e.c);
    }
    *shift_out = shift;
    return m;
}

Matrix<PolyZ> submatrix(const Matrix<PolyZ>& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    Matrix<PolyZ> out(rows.size(), std::vector<PolyZ>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out[i][j] = m[static_cast<size_t>(rows[i])][static_cast<size_t>(cols[j])];
    return out;
}

}  // namespace

Matrix<RatFuncZ> exact_green(const FiniteGraph& g) {
    validate_graph(g);
    if (g.boundary < 0) throw ParseError("exact_green needs a boundary vertex");
    int shift = 0;
    Matrix<PolyZ> lap = scaled_laplacian(g, &shift);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count; ++v)
        if (v != g.boundary) keep.push_back(v);
    const size_t n = static_cast<size_t>(g.vertex_count);
    Matrix<RatFuncZ> green(n, std::vector<RatFuncZ>(n, RatFuncZ()));
    if (keep.empty()) return green;
    Matrix<PolyZ> block = submatrix(lap, keep, keep);
    Matrix<RatFuncZ> inv;
    try {
        inv = bareiss_solve(block, identity_matrix<PolyZ>(keep.size()));
    } catch (const SingularMatrix&) {
        throw SingularLaplacian();
    }
    // block = z^shift * Delta restricted, so Delta^{-1} = z^shift * block^{-1}.
    const RatFuncZ zpow(PolyZ::monomial(shift), PolyZ(Rational(1)));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            green[static_cast<size_t>(keep[i])][static_cast<size_t>(keep[j])] =
                zpow * inv[i][j];
    return green;
}

Matrix<RatFuncZ> response_matrix(const FiniteGraph& g) {
    validate_graph(g);
    if (g.nodes.empty()) throw ParseError("response_matrix needs nodes");
    int shift = 0;
    Matrix<PolyZ> lap = scaled_laplacian(g, &shift);
    std::vector<char> is_node(static_cast<size_t>(g.vertex_count), 0);
    for (int v : g.nodes) is_node[static_cast<size_t>(v)] = 1;
    std::vector<int> interior;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!is_node[static_cast<size_t>(v)]) interior.push_back(v);

    const size_t n = g.nodes.size();
    const RatFuncZ zinv(PolyZ(Rational(1)), PolyZ::monomial(shift));
    Matrix<RatFuncZ> resp(n, std::vector<RatFuncZ>(n, RatFuncZ()));
    if (interior.empty()) {
        Matrix<PolyZ> nn = submatrix(lap, g.nodes, g.nodes);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                resp[i][j] = -(zinv * RatFuncZ(nn[i][j], PolyZ(Rational(1))));
        return resp;
    }
    Matrix<PolyZ> nn = submatrix(lap, g.nodes, g.nodes);
    Matrix<PolyZ> ni = submatrix(lap, g.nodes, interior);
    Matrix<PolyZ> in = submatrix(lap, interior, g.nodes);
    Matrix<PolyZ> ii = submatrix(lap, interior, interior);
    Matrix<RatFuncZ> x;
    try {
        x = bareiss_solve(ii, in);  // x = ii^{-1} * in
    } catch (const SingularMatrix&) {
        throw SingularLaplacian();
    }
    // Schur complement: nn - ni * ii^{-1} * in, then undo the z^shift scale.
    // (The scale cancels in ni * ii^{-1} * in, so only one factor remains.)
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RatFuncZ acc(nn[i][j], PolyZ(Rational(1)));
            for (size_t k = 0; k < interior.size(); ++k)
                acc = acc - RatFuncZ(ni[i][k], PolyZ(Rational(1))) * x[k][j];
            resp[i][j] = -(zinv * acc);
        }
    return resp;
}

FiniteGraph merge_vertices(const FiniteGraph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("merge_vertices: identical vertices");
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count)
        throw std::invalid_argument("merge_vertices: vertex out of range");
    auto remap = [&](int v) {
        if (v == b) v = a;
        return v > b ? v - 1 : v;
    };
    FiniteGraph out;
    out.vertex_count = g.vertex_count - 1;
    for (const GraphEdge& e : g.edges) {
        GraphEdge ne = e;
        ne.u = remap(e.u);
        ne.v = remap(e.v);
        if (ne.u != ne.v) out.edges.push_back(ne);
    }
    if (g.boundary >= 0) out.boundary = remap(g.boundary);
    for (int v : g.nodes) {
        int nv = remap(v);
        if (std::find(out.nodes.begin(), out.nodes.end(), nv) == out.nodes.end())
            out.nodes.push_back(nv);
    }
    return out;
}

Rational count_spanning_trees(const FiniteGraph& g) {
    validate_graph(g);
    if (g.vertex_count == 1) return Rational(1);
    const size_t n = static_cast<size_t>(g.vertex_count);
    Matrix<Rational> lap(n - 1, std::vector<Rational>(n - 1, Rational(0)));
    // Matrix-tree with the last vertex's row and column struck out.
    auto idx = [&](int v) { return static_cast<size_t>(v); };
    for (const GraphEdge& e : g.edges) {
        const size_t u = idx(e.u), v = idx(e.v);
        if (u < n - 1) lap[u][u] += e.c;
        if (v < n - 1) lap[v][v] += e.c;
        if (u < n - 1 && v < n - 1) {
            lap[u][v] -= e.c;
            lap[v][u] -= e.c;
        }
    }
    return field_det(lap);
}

}  // namespace groves
