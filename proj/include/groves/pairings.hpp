#pragma once

#include <string>
#include <utility>
#include <vector>

#include "groves/errors.hpp"

namespace groves {

// Geometry throughout: nodes 1..n-1 sit counterclockwise on the inner
// boundary ring, node n sits alone on the outer one, and the zipper runs
// through the gap between node n-1 and node 1.

// A perfect matching of {1..n} whose pairs carry a direction, stored as
// (dest, src).  The canonical direction points each pair at its endpoint
// that comes first in the cut order (node n's pair points at its partner).
struct DirectedPairing {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // (dest, src)

    bool operator==(const DirectedPairing&) const = default;
    std::string str() const;
};

// Row label of the annular connection system: R lists destinations, S the
// aligned sources, so R[i] receives the connection from S[i].  Node n is
// always last in S.
struct RowIndex {
    std::vector<int> R, S;

    bool operator==(const RowIndex&) const = default;
    std::string str() const;
};

// A partition of a subset of {1..n} into disjoint nonempty parts.  Nodes
// missing from every part are unconstrained ("internal").
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> parts;

    std::string str() const;
};

// Parts of size one or two only, plus an explicit record of which nodes
// were de-listed along the way.  Pairs are stored (low, high); orientation
// bookkeeping happens in the annular module.
struct PartialPairing {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singletons;
    std::vector<int> unlisted;

    bool operator==(const PartialPairing&) const = default;
    std::string str() const;
};

enum class ReduceMode { circular, annular_one };

// All annular pairings of {1..n}, in the canonical order used for the
// columns of the connection matrix: the partner h of node n descends from
// n-1 to 1, and pairings sharing an h follow the lexicographic order of
// their close/open patterns along the cut.
std::vector<DirectedPairing> enumerate_annular_pairings(int n);

// Row label -> pairing: place a + at each destination and a - at each
// source on the cycle 1..n-1, locate the unique + from which the remaining
// signs read as a nonnegative prefix sequence, pair that node with n, and
// stack-match the rest.
DirectedPairing cycle_lemma_forward(const RowIndex& row);

// Pairing -> row label; inverse of cycle_lemma_forward.
// Throws NotAnnular if the pairing does not embed.
RowIndex cycle_lemma_backward(const DirectedPairing& p);

bool annular_embeddable(const DirectedPairing& p);
bool annular_embeddable(const Partition& sigma);

// Expresses Z[sigma] as a signed sum of partial-pairing Z's by repeatedly
// de-listing the pivot node j of an oversized part: Z[tau] = Z[tau - j]
// minus the terms where j joins some other part.  Terms whose partition
// cannot embed (circularly, or on the annulus) are dropped as zero.
std::vector<std::pair<int, PartialPairing>> reduce_partition(const Partition& sigma,
                                                             ReduceMode mode);

}  // namespace groves
