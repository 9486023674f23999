#include "groves/wilson.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace groves {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
    // SplitMix64 finalizer.
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// SplitMix64 run in counter mode: block i of stream s is a pure function of
// (seed, s, i), which is what makes worker partitioning irrelevant to the
// output.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0xBF58476D1CE4E5B9ULL)) {}

    std::uint32_t bits(int k) {
        if (avail_ < k) {
            buf_ = mix64(base_ + counter_++ * kGolden);
            avail_ = 64;
        }
        const std::uint32_t out = static_cast<std::uint32_t>(buf_ & ((1u << k) - 1));
        buf_ >>= k;
        avail_ -= k;
        return out;
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
    std::uint64_t buf_ = 0;
    int avail_ = 0;
};

struct StepTable {
    // Two direction sets: square/triangular use set 0 everywhere; hexagonal
    // picks by site class (x + y) mod 3.
    int dirs = 0;
    int dx[2][6] = {};
    int dy[2][6] = {};
};

StepTable make_steps(LatticeKind lat) {
    StepTable t;
    switch (lat) {
        case LatticeKind::square:
            t.dirs = 4;
            t.dx[0][0] = 1; t.dy[0][0] = 0;
            t.dx[0][1] = 0; t.dy[0][1] = 1;
            t.dx[0][2] = -1; t.dy[0][2] = 0;
            t.dx[0][3] = 0; t.dy[0][3] = -1;
            break;
        case LatticeKind::triangular:
            t.dirs = 6;
            t.dx[0][0] = 1; t.dy[0][0] = 0;
            t.dx[0][1] = 0; t.dy[0][1] = 1;
            t.dx[0][2] = -1; t.dy[0][2] = 1;
            t.dx[0][3] = -1; t.dy[0][3] = 0;
            t.dx[0][4] = 0; t.dy[0][4] = -1;
            t.dx[0][5] = 1; t.dy[0][5] = -1;
            break;
        case LatticeKind::hexagonal:
            t.dirs = 3;
            // class 0 sites
            t.dx[0][0] = 1; t.dy[0][0] = 0;
            t.dx[0][1] = 0; t.dy[0][1] = 1;
            t.dx[0][2] = -1; t.dy[0][2] = -1;
            // class 1 sites
            t.dx[1][0] = -1; t.dy[1][0] = 0;
            t.dx[1][1] = 0; t.dy[1][1] = -1;
            t.dx[1][2] = 1; t.dy[1][2] = 1;
            break;
    }
    return t;
}

int site_class(LatticeKind lat, int x, int y) {
    if (lat != LatticeKind::hexagonal) return 0;
    const int c = (x + y) % 3;
    return c < 0 ? c + 3 : c;
}

int draw_dir(CounterRng& rng, int dirs) {
    if (dirs == 4) return static_cast<int>(rng.bits(2));
    if (dirs == 3) {
        for (;;) {
            const std::uint32_t r = rng.bits(2);
            if (r < 3) return static_cast<int>(r);
        }
    }
    for (;;) {  // dirs == 6
        const std::uint32_t r = rng.bits(3);
        if (r < 6) return static_cast<int>(r);
    }
}

struct Walker {
    int side;
    LatticeKind lat;
    StepTable steps;
    int cx, cy;
    // Loop-erasure bookkeeping, reused across samples via stamps.
    std::vector<std::uint32_t> stamp;
    std::vector<std::int32_t> index;
    std::uint32_t cur_stamp = 0;
    std::vector<std::int32_t> path;  // vertex ids y * side + x
    std::vector<std::int8_t> path_dir;

    Walker(int side_, LatticeKind lat_) : side(side_), lat(lat_), steps(make_steps(lat_)) {
        cx = side / 2;
        cy = side / 2;
        while (site_class(lat, cx, cy) == 2) ++cy;  // hexagonal: land on a real site
        stamp.assign(static_cast<size_t>(side) * static_cast<size_t>(side), 0);
        index.assign(stamp.size(), 0);
        path.reserve(1024);
        path_dir.reserve(1024);
    }

    // Runs one loop-erased walk from the center to the boundary; afterwards
    // `path` holds the vertices and `path_dir` the direction taken out of
    // each of them (the last one leads off the grid).
    void run(CounterRng& rng) {
        ++cur_stamp;
        path.clear();
        path_dir.clear();
        int x = cx, y = cy;
        std::int32_t id = static_cast<std::int32_t>(y) * side + x;
        stamp[static_cast<size_t>(id)] = cur_stamp;
        index[static_cast<size_t>(id)] = 0;
        path.push_back(id);
        path_dir.push_back(-1);
        for (;;) {
            const int cls = site_class(lat, x, y);
            const int d = draw_dir(rng, steps.dirs);
            const int nx = x + steps.dx[cls][d];
            const int ny = y + steps.dy[cls][d];
            path_dir.back() = static_cast<std::int8_t>(d);
            if (nx < 0 || nx >= side || ny < 0 || ny >= side) return;  // reached the rim
            const std::int32_t nid = static_cast<std::int32_t>(ny) * side + nx;
            if (stamp[static_cast<size_t>(nid)] == cur_stamp) {
                // Walked into the current path: erase the loop.
                const std::int32_t keep = index[static_cast<size_t>(nid)];
                for (size_t k = static_cast<size_t>(keep) + 1; k < path.size(); ++k)
                    stamp[static_cast<size_t>(path[k])] = 0;
                path.resize(static_cast<size_t>(keep) + 1);
                path_dir.resize(static_cast<size_t>(keep) + 1);
            } else {
                index[static_cast<size_t>(nid)] = static_cast<std::int32_t>(path.size());
                stamp[static_cast<size_t>(nid)] = cur_stamp;
                path.push_back(nid);
                path_dir.push_back(-1);
            }
            x = nx;
            y = ny;
        }
    }
};

void tally_range(int side, LatticeKind lat, std::uint64_t seed, long long lo, long long hi,
                 std::vector<std::int64_t>* vhits, std::vector<std::int64_t>* ehits) {
    Walker w(side, lat);
    const int dirs = w.steps.dirs;
    for (long long s = lo; s < hi; ++s) {
        CounterRng rng(seed, static_cast<std::uint64_t>(s));
        w.run(rng);
        for (size_t k = 0; k < w.path.size(); ++k) {
            const auto v = static_cast<size_t>(w.path[k]);
            ++(*vhits)[v];
            ++(*ehits)[v * static_cast<size_t>(dirs) + static_cast<size_t>(w.path_dir[k])];
        }
    }
}

}  // namespace

int WilsonTable::direction_count() const {
    switch (lat) {
        case LatticeKind::square: return 4;
        case LatticeKind::triangular: return 6;
        case LatticeKind::hexagonal: return 3;
    }
    return 0;
}

std::int64_t WilsonTable::vertex_count_at(int dx, int dy) const {
    const int x = center_x + dx, y = center_y + dy;
    if (x < 0 || x >= side || y < 0 || y >= side) throw std::out_of_range("offset outside box");
    return vertex_hits[static_cast<size_t>(y) * static_cast<size_t>(side) + static_cast<size_t>(x)];
}

std::int64_t WilsonTable::edge_count_at(int dx, int dy, int dir) const {
    const int x = center_x + dx, y = center_y + dy;
    if (x < 0 || x >= side || y < 0 || y >= side) throw std::out_of_range("offset outside box");
    if (dir < 0 || dir >= direction_count()) throw std::out_of_range("bad direction");
    return edge_hits[(static_cast<size_t>(y) * static_cast<size_t>(side) + static_cast<size_t>(x)) *
                         static_cast<size_t>(direction_count()) +
                     static_cast<size_t>(dir)];
}

double WilsonTable::vertex_prob(int dx, int dy) const {
    return samples == 0 ? 0.0 : static_cast<double>(vertex_count_at(dx, dy)) /
                                    static_cast<double>(samples);
}

std::vector<std::pair<int, int>> step_offsets(LatticeKind lat, int x, int y) {
    const StepTable t = make_steps(lat);
    const int cls = site_class(lat, x, y);
    if (cls == 2) throw std::invalid_argument("not a lattice site");
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d < t.dirs; ++d) out.emplace_back(t.dx[cls][d], t.dy[cls][d]);
    return out;
}

WilsonTable wilson_sample(int side, LatticeKind lat, std::uint64_t seed, long long samples,
                          int workers) {
    if (side < 16) throw std::invalid_argument("wilson_sample needs side >= 16");
    if (samples < 1) throw std::invalid_argument("wilson_sample needs samples >= 1");
    WilsonTable table;
    table.side = side;
    table.lat = lat;
    table.samples = samples;
    {
        Walker probe(side, lat);
        table.center_x = probe.cx;
        table.center_y = probe.cy;
    }
    const size_t cells = static_cast<size_t>(side) * static_cast<size_t>(side);
    const int dirs = table.direction_count();
    table.vertex_hits.assign(cells, 0);
    table.edge_hits.assign(cells * static_cast<size_t>(dirs), 0);

    int nworkers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    if (static_cast<long long>(nworkers) > samples) nworkers = static_cast<int>(samples);

    if (nworkers == 1) {
        tally_range(side, lat, seed, 0, samples, &table.vertex_hits, &table.edge_hits);
        return table;
    }
    std::vector<std::vector<std::int64_t>> vparts(static_cast<size_t>(nworkers));
    std::vector<std::vector<std::int64_t>> eparts(static_cast<size_t>(nworkers));
    std::vector<std::thread> threads;
    const long long chunk = samples / nworkers, extra = samples % nworkers;
    long long lo = 0;
    for (int w = 0; w < nworkers; ++w) {
        const long long hi = lo + chunk + (w < extra ? 1 : 0);
        vparts[static_cast<size_t>(w)].assign(cells, 0);
        eparts[static_cast<size_t>(w)].assign(cells * static_cast<size_t>(dirs), 0);
        threads.emplace_back(tally_range, side, lat, seed, lo, hi,
                             &vparts[static_cast<size_t>(w)], &eparts[static_cast<size_t>(w)]);
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (int w = 0; w < nworkers; ++w) {
        for (size_t i = 0; i < cells; ++i) table.vertex_hits[i] += vparts[static_cast<size_t>(w)][i];
        for (size_t i = 0; i < table.edge_hits.size(); ++i)
            table.edge_hits[i] += eparts[static_cast<size_t>(w)][i];
    }
    return table;
}

std::vector<std::pair<int, int>> wilson_single_path(int side, LatticeKind lat,
                                                    std::uint64_t seed, long long sample_index) {
    if (side < 16) throw std::invalid_argument("wilson_single_path needs side >= 16");
    Walker w(side, lat);
    CounterRng rng(seed, static_cast<std::uint64_t>(sample_index));
    w.run(rng);
    std::vector<std::pair<int, int>> out;
    out.reserve(w.path.size());
    for (std::int32_t id : w.path) out.emplace_back(id % side, id / side);
    return out;
}

}  // namespace groves
