#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "groves/lattice_kind.hpp"

namespace groves {

// Empirical intensity table for the tree path from the center of a wired
// side x side box to the boundary.  Counts are over loop-erased walks, so
// vertex_count_at(0, 0) always equals samples.  Edge counts are directed:
// edge_count_at(dx, dy, d) is the number of paths that leave the vertex at
// offset (dx, dy) through direction d (the final hop to the boundary is
// included for vertices at the rim).
struct WilsonTable {
    int side = 0;
    LatticeKind lat = LatticeKind::square;
    int center_x = 0, center_y = 0;
    long long samples = 0;
    std::vector<std::int64_t> vertex_hits;  // side * side
    std::vector<std::int64_t> edge_hits;    // side * side * direction_count

    int direction_count() const;
    std::int64_t vertex_count_at(int dx, int dy) const;
    std::int64_t edge_count_at(int dx, int dy, int dir) const;
    double vertex_prob(int dx, int dy) const;
};

// Offsets a walker may take from (x, y); for the hexagonal lattice they
// depend on the site's class, so the position is part of the query.
std::vector<std::pair<int, int>> step_offsets(LatticeKind lat, int x, int y);

// Samples `samples` loop-erased walks from the center of the wired box to
// its boundary and tallies the paths.  Deterministic for a given seed: the
// randomness of sample i depends only on (seed, i), so the worker count
// (0 = one per hardware thread) never changes the table.
WilsonTable wilson_sample(int side, LatticeKind lat, std::uint64_t seed, long long samples,
                          int workers = 0);

// The loop-erased path of one sample, as absolute (x, y) vertices starting
// at the center; the final vertex is the last one inside the box.
std::vector<std::pair<int, int>> wilson_single_path(int side, LatticeKind lat,
                                                    std::uint64_t seed, long long sample_index);

}  // namespace groves
