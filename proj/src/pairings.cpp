#include "groves/pairings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace groves {

namespace {

// Order of the inner nodes once the annulus is cut along the h--n
// connection: h+1, ..., n-1, 1, ..., h-1.
std::vector<int> cut_order(int n, int h) {
    std::vector<int> order;
    order.reserve(n - 2);
    for (int t = h + 1; t < n; ++t) order.push_back(t);
    for (int t = 1; t < h; ++t) order.push_back(t);
    return order;
}

void check_even_n(int n) {
    if (n < 2 || n % 2 != 0) throw Error("node count must be even and at least 2");
}

void validate_pairing(const DirectedPairing& p) {
    check_even_n(p.n);
    if (static_cast<int>(p.pairs.size()) * 2 != p.n)
        throw Error("pairing must cover every node exactly once");
    std::vector<char> seen(p.n + 1, 0);
    for (auto [r, s] : p.pairs)
        for (int v : {r, s}) {
            if (v < 1 || v > p.n) throw Error("pairing node out of range");
            if (seen[v]++) throw Error("pairing node repeated");
        }
}

void validate_partition(const Partition& sigma) {
    if (sigma.n < 1) throw Error("partition node count must be positive");
    std::vector<char> seen(sigma.n + 1, 0);
    for (const auto& part : sigma.parts) {
        if (part.empty()) throw Error("partition has an empty part");
        for (int v : part) {
            if (v < 1 || v > sigma.n) throw Error("partition node out of range");
            if (seen[v]++) throw Error("partition node listed twice");
        }
    }
}

// Emits the balanced nonnegative-prefix patterns of k opens ('U') and k
// closes ('D') in lexicographic order with 'D' < 'U'.
void dyck_rec(int height, int ups_left, int downs_left, std::vector<char>& cur,
              std::vector<std::vector<char>>& out) {
    if (ups_left == 0 && downs_left == 0) {
        out.push_back(cur);
        return;
    }
    if (height > 0) {
        cur.push_back('D');
        dyck_rec(height - 1, ups_left, downs_left - 1, cur, out);
        cur.pop_back();
    }
    if (ups_left > 0) {
        cur.push_back('U');
        dyck_rec(height + 1, ups_left - 1, downs_left, cur, out);
        cur.pop_back();
    }
}

DirectedPairing pairing_from_path(int n, int h, const std::vector<char>& path) {
    const auto order = cut_order(n, h);
    std::vector<int> open;                            // positions of unmatched opens
    std::map<int, std::pair<int, int>> by_dest_pos;   // dest position -> (dest, src)
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        if (path[t] == 'U') {
            open.push_back(t);
        } else {
            int d = open.back();
            open.pop_back();
            by_dest_pos[d] = {order[d], order[t]};
        }
    }
    DirectedPairing p;
    p.n = n;
    p.pairs.reserve(n / 2);
    for (const auto& [pos, pair] : by_dest_pos) p.pairs.push_back(pair);
    p.pairs.emplace_back(h, n);
    return p;
}

// True when b meets at least two of the cyclic gaps cut by the elements of
// a; for disjoint sorted sets this is exactly the interleaving test.
bool parts_cross(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() < 2 || b.size() < 2) return false;
    auto gap = [&a](int v) {
        size_t idx = std::upper_bound(a.begin(), a.end(), v) - a.begin();
        return idx == a.size() ? 0 : static_cast<int>(idx);
    };
    int g = gap(b[0]);
    for (int v : b)
        if (gap(v) != g) return true;
    return false;
}

bool circular_parts_embeddable(const std::vector<std::vector<int>>& parts) {
    for (size_t x = 0; x < parts.size(); ++x)
        for (size_t y = x + 1; y < parts.size(); ++y)
            if (parts_cross(parts[x], parts[y])) return false;
    return true;
}

// Annular test.  H = the inner members of node n's part.  Cutting along
// the connections from H to n leaves |H| separate disk sectors, so every
// other part must keep all its members inside a single gap between
// cyclically consecutive elements of H, and parts sharing a gap must not
// interleave.  With H empty the inner circle is uncut and the plain
// cyclic test on 1..n-1 applies.
bool annular_parts_embeddable(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<int> H;
    std::vector<std::vector<int>> others;
    for (const auto& part : parts) {
        if (std::find(part.begin(), part.end(), n) != part.end()) {
            for (int v : part)
                if (v != n) H.push_back(v);
        } else {
            others.push_back(part);
        }
    }
    std::sort(H.begin(), H.end());
    if (!H.empty()) {
        auto gap = [&H](int v) {
            size_t idx = std::upper_bound(H.begin(), H.end(), v) - H.begin();
            return idx == H.size() ? 0 : static_cast<int>(idx);
        };
        for (const auto& part : others)
            for (int v : part)
                if (gap(v) != gap(part[0])) return false;
    }
    return circular_parts_embeddable(others);
}

}  // namespace

std::vector<DirectedPairing> enumerate_annular_pairings(int n) {
    check_even_n(n);
    std::vector<std::vector<char>> paths;
    std::vector<char> cur;
    int k = (n - 2) / 2;
    dyck_rec(0, k, k, cur, paths);
    std::vector<DirectedPairing> out;
    out.reserve((n - 1) * paths.size());
    for (int h = n - 1; h >= 1; --h)
        for (const auto& path : paths) out.push_back(pairing_from_path(n, h, path));
    return out;
}

DirectedPairing cycle_lemma_forward(const RowIndex& row) {
    const int n = static_cast<int>(row.R.size() + row.S.size());
    check_even_n(n);
    if (row.R.size() != row.S.size())
        throw Error("row must list equally many destinations and sources");
    std::vector<int> role(n + 1, 0);  // +1 destination, -1 source
    for (int v : row.R) {
        if (v < 1 || v >= n || role[v]) throw Error("bad destination list");
        role[v] = +1;
    }
    bool has_n = false;
    for (int v : row.S) {
        if (v == n && !has_n) {
            has_n = true;
            continue;
        }
        if (v < 1 || v >= n || role[v]) throw Error("bad source list");
        role[v] = -1;
    }
    if (!has_n) throw Error("node n must appear among the sources");

    // The unique destination h whose removal leaves nonnegative prefix
    // sums when the remaining cycle is read starting just past h.
    int h = 0;
    for (int p : row.R) {
        int height = 0;
        bool ok = true;
        for (int step = 1; step < n - 1 && ok; ++step) {
            int t = (p - 1 + step) % (n - 1) + 1;
            height += role[t];
            if (height < 0) ok = false;
        }
        if (ok) {
            h = p;
            break;
        }
    }
    if (h == 0) throw Error("cycle offset not found");

    const auto order = cut_order(n, h);
    std::vector<int> open;
    std::map<int, std::pair<int, int>> by_dest_pos;
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        if (role[order[t]] > 0) {
            open.push_back(t);
        } else {
            if (open.empty()) throw Error("cycle matching underflow");
            int d = open.back();
            open.pop_back();
            by_dest_pos[d] = {order[d], order[t]};
        }
    }
    DirectedPairing p;
    p.n = n;
    for (const auto& [pos, pair] : by_dest_pos) p.pairs.push_back(pair);
    p.pairs.emplace_back(h, n);
    return p;
}

RowIndex cycle_lemma_backward(const DirectedPairing& p) {
    validate_pairing(p);
    int h = 0;
    for (auto [r, s] : p.pairs) {
        if (s == p.n) h = r;
        if (r == p.n) h = s;
    }
    const auto order = cut_order(p.n, h);
    std::vector<int> cpos(p.n + 1, -1), partner(p.n + 1, 0);
    for (int t = 0; t < static_cast<int>(order.size()); ++t) cpos[order[t]] = t;
    for (auto [r, s] : p.pairs) {
        partner[r] = s;
        partner[s] = r;
    }
    // Noncrossing check along the cut, recording each pair at the
    // position of its canonical destination (the earlier endpoint).
    std::vector<int> open;
    std::map<int, std::pair<int, int>> by_dest_pos;
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        int v = order[t];
        int w = partner[v];
        if (cpos[w] > t) {
            open.push_back(t);
        } else {
            if (open.empty() || open.back() != cpos[w]) throw NotAnnular();
            open.pop_back();
            by_dest_pos[cpos[w]] = {w, v};
        }
    }
    RowIndex row;
    row.R.reserve(p.n / 2);
    row.S.reserve(p.n / 2);
    for (const auto& [pos, pair] : by_dest_pos) {
        row.R.push_back(pair.first);
        row.S.push_back(pair.second);
    }
    row.R.push_back(h);
    row.S.push_back(p.n);
    return row;
}

bool annular_embeddable(const DirectedPairing& p) {
    try {
        cycle_lemma_backward(p);
        return true;
    } catch (const NotAnnular&) {
        return false;
    }
}

bool annular_embeddable(const Partition& sigma) {
    validate_partition(sigma);
    std::vector<std::vector<int>> parts = sigma.parts;
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return annular_parts_embeddable(sigma.n, parts);
}

namespace {

struct RTerm {
    int sign = +1;
    std::vector<std::vector<int>> parts;  // each sorted ascending
    std::vector<int> unlisted;
};

// Locates the pivot (i, j): i heads the first oversized part in the scan
// order of the current phase, j is the following member of i's part.
// Returns false once every part has at most two nodes.
bool pick_pivot(int n, ReduceMode mode, const std::vector<std::vector<int>>& parts,
                int& i, int& j, size_t& ipart) {
    size_t npart = parts.size();
    if (mode == ReduceMode::annular_one) {
        for (size_t x = 0; x < parts.size(); ++x)
            if (std::find(parts[x].begin(), parts[x].end(), n) != parts[x].end()) npart = x;
        if (npart == parts.size())
            throw NonReducible("annular reduction requires node n to be listed");
        // Node n's part shrinks first.
        if (parts[npart].size() > 2) {
            ipart = npart;
            i = parts[npart][0];
            j = parts[npart][1];
            return true;
        }
        if (parts[npart].size() == 2) {
            // Scan the cut order determined by the doubleton {h, n}.
            int h = parts[npart][0];
            std::vector<int> cpos(n + 1, -1);
            const auto order = cut_order(n, h);
            for (int t = 0; t < static_cast<int>(order.size()); ++t) cpos[order[t]] = t;
            int best = n;
            for (size_t x = 0; x < parts.size(); ++x) {
                if (parts[x].size() <= 2) continue;
                for (int v : parts[x])
                    if (cpos[v] < best) {
                        best = cpos[v];
                        ipart = x;
                    }
            }
            if (best == n) return false;
            i = order[best];
            int next = n;
            for (int v : parts[ipart])
                if (cpos[v] > best && cpos[v] < next) next = cpos[v];
            j = order[next];
            return true;
        }
        // Node n still in a singleton part: fall through to the label scan,
        // which cannot pick n's part since it is not oversized.
    }
    int besti = n + 1;
    for (size_t x = 0; x < parts.size(); ++x)
        if (parts[x].size() > 2 && parts[x][0] < besti) {
            besti = parts[x][0];
            ipart = x;
        }
    if (besti > n) return false;
    i = besti;
    j = parts[ipart][1];
    return true;
}

bool term_embeddable(int n, ReduceMode mode, const std::vector<std::vector<int>>& parts) {
    return mode == ReduceMode::circular ? circular_parts_embeddable(parts)
                                        : annular_parts_embeddable(n, parts);
}

PartialPairing to_partial(int n, const RTerm& t) {
    PartialPairing pp;
    pp.n = n;
    for (const auto& part : t.parts) {
        if (part.size() == 1)
            pp.singletons.push_back(part[0]);
        else
            pp.pairs.emplace_back(part[0], part[1]);
    }
    std::sort(pp.pairs.begin(), pp.pairs.end());
    std::sort(pp.singletons.begin(), pp.singletons.end());
    pp.unlisted = t.unlisted;
    std::sort(pp.unlisted.begin(), pp.unlisted.end());
    return pp;
}

constexpr long kReduceGuard = 1L << 22;

void reduce_rec(int n, ReduceMode mode, const RTerm& t,
                std::vector<std::pair<int, PartialPairing>>& out, long& guard) {
    if (++guard > kReduceGuard) throw NonReducible("partition reduction did not terminate");
    int i = 0, j = 0;
    size_t ipart = 0;
    if (!pick_pivot(n, mode, t.parts, i, j, ipart)) {
        out.emplace_back(t.sign, to_partial(n, t));
        return;
    }
    RTerm base = t;
    auto& bpart = base.parts[ipart];
    bpart.erase(std::find(bpart.begin(), bpart.end(), j));
    base.unlisted.push_back(j);
    if (term_embeddable(n, mode, base.parts)) reduce_rec(n, mode, base, out, guard);
    for (size_t l = 0; l < t.parts.size(); ++l) {
        if (l == ipart) continue;
        RTerm m = t;
        m.sign = -t.sign;
        auto& mpart = m.parts[ipart];
        mpart.erase(std::find(mpart.begin(), mpart.end(), j));
        m.parts[l].insert(std::upper_bound(m.parts[l].begin(), m.parts[l].end(), j), j);
        if (term_embeddable(n, mode, m.parts)) reduce_rec(n, mode, m, out, guard);
    }
}

}  // namespace

std::vector<std::pair<int, PartialPairing>> reduce_partition(const Partition& sigma,
                                                             ReduceMode mode) {
    validate_partition(sigma);
    RTerm root;
    root.parts = sigma.parts;
    std::vector<char> listed(sigma.n + 1, 0);
    for (auto& part : root.parts) {
        std::sort(part.begin(), part.end());
        for (int v : part) listed[v] = 1;
    }
    for (int v = 1; v <= sigma.n; ++v)
        if (!listed[v]) root.unlisted.push_back(v);
    std::vector<std::pair<int, PartialPairing>> out;
    if (!term_embeddable(sigma.n, mode, root.parts)) return out;
    long guard = 0;
    reduce_rec(sigma.n, mode, root, out, guard);
    return out;
}

std::string DirectedPairing::str() const {
    std::ostringstream os;
    os << "Z[";
    for (size_t x = 0; x < pairs.size(); ++x) {
        if (x) os << "|";
        os << pairs[x].first << "<" << pairs[x].second;
    }
    os << "]";
    return os.str();
}

std::string RowIndex::str() const {
    std::ostringstream os;
    os << "L{";
    for (size_t x = 0; x < R.size(); ++x) os << (x ? "," : "") << R[x];
    os << "}^{";
    for (size_t x = 0; x < S.size(); ++x) os << (x ? "," : "") << S[x];
    os << "}";
    return os.str();
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t x = 0; x < parts.size(); ++x) {
        if (x) os << "|";
        for (size_t y = 0; y < parts[x].size(); ++y) os << (y ? "," : "") << parts[x][y];
    }
    return os.str();
}

std::string PartialPairing::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : pairs) {
        if (!first) os << "|";
        os << a << "," << b;
        first = false;
    }
    for (int v : singletons) {
        if (!first) os << "|";
        os << v;
        first = false;
    }
    if (!unlisted.empty()) {
        os << " (internal:";
        for (int v : unlisted) os << " " << v;
        os << ")";
    }
    return os.str();
}

}  // namespace groves
