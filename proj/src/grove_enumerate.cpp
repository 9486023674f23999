#include "groves/grove_enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "groves/errors.hpp"

namespace groves {

namespace {

constexpr int kMaxVertices = 14;
constexpr size_t kMaxEdges = 30;

// Union-find over vertices with rollback and per-vertex zipper potentials.
// No path compression: parent pointers only change at a union, so undoing a
// union is a constant-time restore.
class GroveEnumerator {
public:
    GroveEnumerator(const FiniteGraph& g, const std::vector<int>& part_of, int part_count,
                    std::vector<std::pair<int, int>> pairs)
        : g_(g),
          pairs_(std::move(pairs)),
          parent_(static_cast<size_t>(g.vertex_count)),
          size_(static_cast<size_t>(g.vertex_count), 1),
          pot_(static_cast<size_t>(g.vertex_count), 0),
          comp_part_(static_cast<size_t>(g.vertex_count), -1),
          comp_cycle_(static_cast<size_t>(g.vertex_count), 0),
          parts_open_(static_cast<size_t>(part_count), 0) {
        for (size_t v = 0; v < parent_.size(); ++v) parent_[v] = static_cast<int>(v);
        int listed = 0;
        for (size_t i = 0; i < part_of.size(); ++i) {
            if (part_of[i] < 0) continue;
            comp_part_[static_cast<size_t>(g.nodes[i])] = part_of[i];
            ++parts_open_[static_cast<size_t>(part_of[i])];
            ++listed;
        }
        deficient_ = g.vertex_count - listed;
        open_extra_ = 0;
        for (int open : parts_open_) open_extra_ += open - 1;
        cond_ = Rational(1);
    }

    LaurentZ run() {
        recurse(0);
        return total_;
    }

private:
    struct Undo {
        int attached = -1;   // root that gained a parent (-1: cycle closure)
        int absorber = 0;    // root it was attached to, or the cycle's root
        int old_size = 0;
        int old_part = -1;
        char old_cycle = 0;
        char closed_cycle = 0;
        char closed_part = 0;  // union joined two components of one part
        char fixed_deficient = 0;
    };

    std::pair<int, int> find(int v) const {
        int p = 0;
        while (parent_[static_cast<size_t>(v)] != v) {
            p += pot_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(v)];
        }
        return {v, p};
    }

    // Tries to add edge e to the grove; returns true (with an undo record
    // pushed) when the partial configuration can still complete.
    bool include(const GraphEdge& e) {
        auto [ru, pu] = find(e.u);
        auto [rv, pv] = find(e.v);
        if (ru == rv) {
            // Closes a cycle.  Only allowed once per component, only in
            // components without listed nodes, and only with nonzero winding
            // (a zero-winding cycle weighs 2 - 1 - 1 = 0).
            const size_t r = static_cast<size_t>(ru);
            if (comp_cycle_[r] || comp_part_[r] >= 0) return false;
            const int w = pu + e.zip - pv;
            if (w == 0) return false;
            comp_cycle_[r] = 1;
            --deficient_;
            windings_.push_back(w);
            undo_.push_back(Undo{-1, ru, 0, -1, 0, 1, 0, 0});
            cond_ *= e.c;
            return true;
        }
        const int pa = comp_part_[static_cast<size_t>(ru)];
        const int pb = comp_part_[static_cast<size_t>(rv)];
        if (pa >= 0 && pb >= 0 && pa != pb) return false;       // joins two parts
        const char ca = comp_cycle_[static_cast<size_t>(ru)];
        const char cb = comp_cycle_[static_cast<size_t>(rv)];
        if (ca && cb) return false;                             // two cycles
        if ((ca && pb >= 0) || (cb && pa >= 0)) return false;   // node joins a cycle
        int big = ru, small = rv;
        int pot_small = pu - pv + e.zip;  // pi(rv) - pi(ru) when rv hangs below ru
        if (size_[static_cast<size_t>(big)] < size_[static_cast<size_t>(small)]) {
            std::swap(big, small);
            pot_small = -pot_small;
        }
        const size_t bs = static_cast<size_t>(big), ss = static_cast<size_t>(small);
        Undo u{small, big, size_[bs], comp_part_[bs], comp_cycle_[bs], 0, 0, 0};
        if (pa >= 0 && pb >= 0) {  // same part: two of its components met
            --parts_open_[static_cast<size_t>(pa)];
            --open_extra_;
            u.closed_part = 1;
        } else {
            // One side was neither a node component nor a cycle component.
            --deficient_;
            u.fixed_deficient = 1;
        }
        undo_.push_back(u);
        parent_[ss] = big;
        pot_[ss] = pot_small;
        size_[bs] += size_[ss];
        comp_part_[bs] = std::max(pa, pb);
        comp_cycle_[bs] = static_cast<char>(ca | cb);
        cond_ *= e.c;
        return true;
    }

    void unwind(const GraphEdge& e) {
        const Undo u = undo_.back();
        undo_.pop_back();
        cond_ /= e.c;
        if (u.closed_cycle) {
            comp_cycle_[static_cast<size_t>(u.absorber)] = 0;
            ++deficient_;
            windings_.pop_back();
            return;
        }
        const size_t bs = static_cast<size_t>(u.absorber);
        const size_t ss = static_cast<size_t>(u.attached);
        parent_[ss] = u.attached;
        pot_[ss] = 0;
        size_[bs] = u.old_size;
        comp_part_[bs] = u.old_part;
        comp_cycle_[bs] = u.old_cycle;
        if (u.closed_part) {
            ++parts_open_[static_cast<size_t>(u.old_part)];
            ++open_extra_;
        }
        if (u.fixed_deficient) ++deficient_;
    }

    void recurse(size_t idx) {
        // Every further edge repairs at most one deficiency: one cycle-less
        // node-less component, or one part still split in two.
        if (deficient_ + open_extra_ > static_cast<int>(g_.edges.size() - idx)) return;
        if (idx == g_.edges.size()) {
            harvest();
            return;
        }
        recurse(idx + 1);  // edge absent
        if (include(g_.edges[idx])) {
            recurse(idx + 1);
            unwind(g_.edges[idx]);
        }
    }

    void harvest() {
        // The feasibility bound guarantees this at a surviving leaf, but the
        // invariants are cheap to restate exactly.
        if (deficient_ != 0 || open_extra_ != 0) return;
        int exponent = 0;
        for (const auto& [dest, src] : pairs_) {
            exponent += find(g_.nodes[dest]).second - find(g_.nodes[src]).second;
        }
        LaurentZ term = LaurentZ::monomial(exponent, cond_);
        for (int w : windings_) {
            LaurentZ cyc = LaurentZ(Rational(2));
            cyc -= LaurentZ::monomial(w);
            cyc -= LaurentZ::monomial(-w);
            term *= cyc;
        }
        total_ += term;
    }

    const FiniteGraph& g_;
    std::vector<std::pair<int, int>> pairs_;  // node positions (dest, src), 0-based
    std::vector<int> parent_, size_, pot_;
    std::vector<int> comp_part_;
    std::vector<char> comp_cycle_;
    std::vector<int> parts_open_;  // per part: number of components still carrying it
    int deficient_ = 0;            // components with neither listed node nor cycle
    int open_extra_ = 0;           // sum over parts of (components carrying it - 1)
    std::vector<Undo> undo_;
    std::vector<int> windings_;
    Rational cond_;
    LaurentZ total_;
};

void check_size(const FiniteGraph& g) {
    if (g.vertex_count > kMaxVertices)
        throw TooLarge("grove enumeration limited to 14 vertices");
    if (g.edges.size() > kMaxEdges)
        throw TooLarge("grove enumeration limited to 30 edges");
}

}  // namespace

LaurentZ enumerate_groves(const FiniteGraph& g, const PartialPairing& sigma) {
    validate_graph(g);
    check_size(g);
    const int n = static_cast<int>(g.nodes.size());
    if (sigma.n != n)
        throw std::invalid_argument("pairing size does not match the graph's node count");
    std::vector<int> part_of(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    auto claim = [&](int label) {
        if (label < 1 || label > n || used[static_cast<size_t>(label)])
            throw std::invalid_argument("pairing labels must partition a subset of 1..n");
        used[static_cast<size_t>(label)] = 1;
    };
    int part_count = 0;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [dest, src] : sigma.pairs) {
        claim(dest);
        claim(src);
        part_of[static_cast<size_t>(dest - 1)] = part_count;
        part_of[static_cast<size_t>(src - 1)] = part_count;
        ++part_count;
        pairs.emplace_back(dest - 1, src - 1);
    }
    for (int s : sigma.singletons) {
        claim(s);
        part_of[static_cast<size_t>(s - 1)] = part_count;
        ++part_count;
    }
    for (int u : sigma.unlisted) claim(u);  // stays internal: part_of -1
    if (part_count == 0)
        throw std::invalid_argument("pairing must list at least one node");
    return GroveEnumerator(g, part_of, part_count, std::move(pairs)).run();
}

LaurentZ enumerate_groves(const FiniteGraph& g, const Partition& sigma) {
    validate_graph(g);
    check_size(g);
    const int n = static_cast<int>(g.nodes.size());
    if (sigma.n != n)
        throw std::invalid_argument("partition size does not match the graph's node count");
    std::vector<int> part_of(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (size_t p = 0; p < sigma.parts.size(); ++p) {
        if (sigma.parts[p].empty()) throw std::invalid_argument("empty partition part");
        for (int label : sigma.parts[p]) {
            if (label < 1 || label > n || used[static_cast<size_t>(label)])
                throw std::invalid_argument("partition labels must lie in 1..n, no repeats");
            used[static_cast<size_t>(label)] = 1;
            part_of[static_cast<size_t>(label - 1)] = static_cast<int>(p);
        }
    }
    // Labels in no part stay internal, mirroring the unlisted set of a
    // partial pairing.
    if (sigma.parts.empty())
        throw std::invalid_argument("partition must list at least one node");
    return GroveEnumerator(g, part_of, static_cast<int>(sigma.parts.size()), {}).run();
}

}  // namespace groves
