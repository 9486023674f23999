#pragma once

// Shared random-graph builders for tests that cross-check exact linear
// algebra against direct grove enumeration.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groves/finite_graph.hpp"
#include "groves/pairings.hpp"

namespace groves::testsupport {

inline Rational random_conductance(std::mt19937_64& rng) {
    return Rational(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
}

// Annular test bed: a cylinder grid of `rings` x `cols` vertices plus a hub.
// Ring 0 is the inner boundary and carries the inner nodes at the requested
// columns (ascending, starting at column 0); the hub behind ring rings-1 is
// both the wired boundary and the last node.  Ring edges that wrap from
// column cols-1 back to column 0 cross the zipper seam with exponent +1 in
// that direction, which places the seam in the gap between the last inner
// node and node 1.
inline FiniteGraph cylinder_graph(int rings, int cols, const std::vector<int>& node_cols,
                                  std::mt19937_64& rng, bool random_conductances = true) {
    if (rings < 1 || cols < 3) throw std::invalid_argument("cylinder too small");
    if (node_cols.empty() || node_cols.front() != 0)
        throw std::invalid_argument("first node must sit at column 0");
    for (size_t i = 0; i + 1 < node_cols.size(); ++i)
        if (node_cols[i] >= node_cols[i + 1]) throw std::invalid_argument("columns must ascend");
    if (node_cols.back() >= cols) throw std::invalid_argument("node column out of range");

    FiniteGraph g;
    const int hub = rings * cols;
    g.vertex_count = hub + 1;
    auto vid = [cols](int r, int c) { return r * cols + c; };
    auto cond = [&]() { return random_conductances ? random_conductance(rng) : Rational(1); };
    for (int r = 0; r < rings; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int next = (c + 1) % cols;
            g.edges.push_back({vid(r, c), vid(r, next), cond(), c + 1 == cols ? 1 : 0});
            if (r + 1 < rings) g.edges.push_back({vid(r, c), vid(r + 1, c), cond(), 0});
        }
    }
    for (int c = 0; c < cols; ++c) g.edges.push_back({vid(rings - 1, c), hub, cond(), 0});
    g.boundary = hub;
    for (int c : node_cols) g.nodes.push_back(vid(0, c));
    g.nodes.push_back(hub);
    return g;
}

// Disk test bed: an m-gon with non-crossing chords, all candidate nodes on
// the outer cycle.  No zipper; used for circular de-listing checks.
inline FiniteGraph polygon_graph(int m, int chord_target, const std::vector<int>& node_vertices,
                                 std::mt19937_64& rng) {
    if (m < 3) throw std::invalid_argument("polygon too small");
    FiniteGraph g;
    g.vertex_count = m;
    for (int i = 0; i < m; ++i)
        g.edges.push_back({i, (i + 1) % m, random_conductance(rng), 0});
    std::vector<std::pair<int, int>> chords;
    auto crosses = [](std::pair<int, int> a, std::pair<int, int> b) {
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    for (int attempt = 0; attempt < 6 * chord_target && static_cast<int>(chords.size()) < chord_target;
         ++attempt) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        if (a > b) std::swap(a, b);
        if (b - a < 2 || (a == 0 && b == m - 1)) continue;  // adjacent on the cycle
        const std::pair<int, int> cand{a, b};
        bool ok = true;
        for (const auto& c : chords)
            if (c == cand || crosses(c, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chords.push_back(cand);
        g.edges.push_back({a, b, random_conductance(rng), 0});
    }
    g.boundary = node_vertices.empty() ? 0 : node_vertices.back();
    g.nodes = node_vertices;
    return g;
}

// Uniform-ish random set partition of {1..n} (each label joins an existing
// part or starts a new one), parts sorted for reproducible printing.
inline Partition random_partition(int n, std::mt19937_64& rng) {
    Partition sigma;
    sigma.n = n;
    for (int label = 1; label <= n; ++label) {
        const auto pick = rng() % (sigma.parts.size() + 1);
        if (pick == sigma.parts.size())
            sigma.parts.push_back({label});
        else
            sigma.parts[pick].push_back(label);
    }
    std::sort(sigma.parts.begin(), sigma.parts.end());
    return sigma;
}

// Reads a partial pairing as a plain partition (pairs and singletons become
// parts; de-listed nodes stay internal).
inline Partition as_partition(const PartialPairing& pp) {
    Partition sigma;
    sigma.n = pp.n;
    for (const auto& [a, b] : pp.pairs) sigma.parts.push_back({a, b});
    for (int s : pp.singletons) sigma.parts.push_back({s});
    return sigma;
}

}  // namespace groves::testsupport
