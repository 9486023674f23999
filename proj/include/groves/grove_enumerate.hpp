#pragma once

#include "groves/finite_graph.hpp"
#include "groves/pairings.hpp"

namespace groves {

// Weighted count of cycle-rooted groves of type sigma on g, as a Laurent
// polynomial in the transport variable z.
//
// A cycle-rooted grove is a spanning subgraph in which every component is
// either a tree containing at least one listed node, or free of listed nodes
// and carrying exactly one cycle of nonzero winding.  Listed nodes means the
// support of sigma: the members of its pairs and singleton parts for a
// PartialPairing, or of all parts for a Partition.  Unlisted nodes, nodes in
// no part, and non-node vertices are ordinary interior vertices.  Nodes in
// the same part must share a tree component; nodes in different parts must
// not.
//
// Weight of one grove: product of edge conductances, times (2 - z^w - z^-w)
// per cycle of winding w, times z^(pi(dest) - pi(src)) per pair of the
// PartialPairing form, where pi is the zipper potential along the tree path
// (traversing an edge u -> v with zip exponent e changes pi by e).  Pairs
// are taken in the order written, (dest, src), regardless of which label is
// smaller; the Partition form attaches no transports.
//
// Throws TooLarge beyond 14 vertices or 30 edges, std::invalid_argument when
// sigma does not fit g.nodes.
LaurentZ enumerate_groves(const FiniteGraph& g, const PartialPairing& sigma);
LaurentZ enumerate_groves(const FiniteGraph& g, const Partition& sigma);

}  // namespace groves
