#include "groves/response_check.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "groves/errors.hpp"
#include "groves/grove_enumerate.hpp"
#include "groves/linalg.hpp"

namespace groves {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

[[noreturn]] void mismatch(const std::string& which, const std::string& detail,
                           const RatFuncZ& lhs, const RatFuncZ& rhs) {
    std::ostringstream os;
    os << which << " failed at " << detail << ": response side " << lhs.str()
       << ", enumeration side " << rhs.str();
    throw MismatchReport(os.str());
}

}  // namespace

ResponseCheckReport check_response_theorems(const FiniteGraph& g, std::uint64_t seed,
                                            int mixed_samples) {
    validate_graph(g);
    const int n = static_cast<int>(g.nodes.size());
    if (n < 2) throw ParseError("response check needs at least two nodes");
    if (std::find(g.nodes.begin(), g.nodes.end(), g.boundary) == g.nodes.end())
        throw ParseError("response check expects the boundary among the nodes");

    ResponseCheckReport report;
    const Matrix<RatFuncZ> resp = response_matrix(g);

    // Partition into singletons: the common denominator of every identity.
    Partition singletons{n, {}};
    for (int i = 1; i <= n; ++i) singletons.parts.push_back({i});
    const RatFuncZ zbase = enumerate_groves(g, singletons).to_ratfunc();
    if (zbase.is_zero()) throw MismatchReport("all-singleton grove sum vanished");

    // Green's function consistency: on the non-boundary nodes the response
    // matrix is the negated inverse of the Green block.
    {
        const Matrix<RatFuncZ> green = exact_green(g);
        std::vector<int> pos;  // node positions other than the boundary's
        for (int i = 0; i < n; ++i)
            if (g.nodes[static_cast<size_t>(i)] != g.boundary) pos.push_back(i);
        Matrix<RatFuncZ> block(pos.size(), std::vector<RatFuncZ>(pos.size()));
        for (size_t a = 0; a < pos.size(); ++a)
            for (size_t b = 0; b < pos.size(); ++b)
                block[a][b] = green[static_cast<size_t>(g.nodes[static_cast<size_t>(pos[a])])]
                                   [static_cast<size_t>(g.nodes[static_cast<size_t>(pos[b])])];
        Matrix<RatFuncZ> inv;
        try {
            inv = field_inverse(block);
        } catch (const SingularMatrix&) {
            throw SingularLaplacian();
        }
        for (size_t a = 0; a < pos.size(); ++a)
            for (size_t b = 0; b < pos.size(); ++b) {
                const RatFuncZ& lhs = resp[static_cast<size_t>(pos[a])][static_cast<size_t>(pos[b])];
                const RatFuncZ rhs = -inv[a][b];
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "(" << pos[a] + 1 << "," << pos[b] + 1 << ")";
                    mismatch("Green-inverse identity", os.str(), lhs, rhs);
                }
                ++report.green_entries;
            }
    }

    // Off-diagonal entries: L_{i,j} * Z[singletons] = Z[pair i<-j | rest].
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            PartialPairing sigma;
            sigma.n = n;
            sigma.pairs = {{i, j}};
            for (int k = 1; k <= n; ++k)
                if (k != i && k != j) sigma.singletons.push_back(k);
            const RatFuncZ rhs = enumerate_groves(g, sigma).to_ratfunc() / zbase;
            const RatFuncZ& lhs = resp[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (lhs != rhs) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ")";
                mismatch("response entry identity", os.str(), lhs, rhs);
            }
            ++report.entry_identities;
        }

    // Principal minors: det L_S^S = (-1)^{|S|} Z[rest singleton, S interior] / Z.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> s_labels;
        PartialPairing sigma;
        sigma.n = n;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1u << (i - 1)))
                s_labels.push_back(i);
            else
                sigma.singletons.push_back(i);
        }
        sigma.unlisted = s_labels;
        Matrix<RatFuncZ> minor(s_labels.size(), std::vector<RatFuncZ>(s_labels.size()));
        for (size_t a = 0; a < s_labels.size(); ++a)
            for (size_t b = 0; b < s_labels.size(); ++b)
                minor[a][b] = resp[static_cast<size_t>(s_labels[a] - 1)]
                                  [static_cast<size_t>(s_labels[b] - 1)];
        const RatFuncZ lhs = field_det(minor);
        RatFuncZ rhs = enumerate_groves(g, sigma).to_ratfunc() / zbase;
        if (s_labels.size() % 2 == 1) rhs = -rhs;
        if (lhs != rhs) {
            std::ostringstream os;
            os << "S = {";
            for (size_t a = 0; a < s_labels.size(); ++a)
                os << (a ? "," : "") << s_labels[a];
            os << "}";
            mismatch("principal minor identity", os.str(), lhs, rhs);
        }
        ++report.principal_identities;
    }

    // Mixed minors det L_{R,T}^{S,T}: R destinations, S sources, T interior,
    // remaining nodes singletons; the enumeration side sums over pairings of
    // R with S, signed by the pairing permutation, with a global (-1)^{|T|}.
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < mixed_samples; ++sample) {
        const int k_cap = std::min(3, n / 2);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k_cap));
        const int t_max = std::min(2, n - 2 * k);
        if (t_max < 0) continue;
        const int t = static_cast<int>(rng() % static_cast<std::uint64_t>(t_max + 1));
        std::vector<int> labels(static_cast<size_t>(n));
        std::iota(labels.begin(), labels.end(), 1);
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> r_set(labels.begin(), labels.begin() + k);
        std::vector<int> s_set(labels.begin() + k, labels.begin() + 2 * k);
        std::vector<int> t_set(labels.begin() + 2 * k, labels.begin() + 2 * k + t);
        std::vector<int> q_set(labels.begin() + 2 * k + t, labels.end());
        std::sort(r_set.begin(), r_set.end());
        std::sort(s_set.begin(), s_set.end());
        std::sort(t_set.begin(), t_set.end());
        std::sort(q_set.begin(), q_set.end());

        std::vector<int> rows = r_set, cols = s_set;
        rows.insert(rows.end(), t_set.begin(), t_set.end());
        cols.insert(cols.end(), t_set.begin(), t_set.end());
        Matrix<RatFuncZ> minor(rows.size(), std::vector<RatFuncZ>(cols.size()));
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b)
                minor[a][b] =
                    resp[static_cast<size_t>(rows[a] - 1)][static_cast<size_t>(cols[b] - 1)];
        const RatFuncZ lhs = field_det(minor);

        RatFuncZ rhs;
        std::vector<int> perm(static_cast<size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            PartialPairing sigma;
            sigma.n = n;
            for (int a = 0; a < k; ++a)
                sigma.pairs.emplace_back(r_set[static_cast<size_t>(a)],
                                         s_set[static_cast<size_t>(perm[static_cast<size_t>(a)])]);
            std::sort(sigma.pairs.begin(), sigma.pairs.end());
            sigma.singletons = q_set;
            sigma.unlisted = t_set;
            RatFuncZ term = enumerate_groves(g, sigma).to_ratfunc();
            if (permutation_sign(perm) < 0) term = -term;
            rhs += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        rhs /= zbase;
        if (t % 2 == 1) rhs = -rhs;
        if (lhs != rhs) {
            std::ostringstream os;
            os << "R = {";
            for (size_t a = 0; a < r_set.size(); ++a) os << (a ? "," : "") << r_set[a];
            os << "}, S = {";
            for (size_t a = 0; a < s_set.size(); ++a) os << (a ? "," : "") << s_set[a];
            os << "}, T = {";
            for (size_t a = 0; a < t_set.size(); ++a) os << (a ? "," : "") << t_set[a];
            os << "}";
            mismatch("mixed minor identity", os.str(), lhs, rhs);
        }
        ++report.mixed_identities;
    }
    return report;
}

}  // namespace groves
