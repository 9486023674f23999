#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groves/exact_value.hpp"
#include "groves/lattice.hpp"
#include "groves/pairings.hpp"

namespace groves {

// Exact intensities of the loop-erased random walk from the origin to
// infinity: the probability that the walk traverses a given directed edge,
// or visits a given vertex.  The walk is the path of the wired uniform
// spanning tree, so each probability is a ratio of tree counts, evaluated
// here through kernel jets and grove ratios rather than by any limit.

// One directed-edge computation.  `nodes` lists the finite marked vertices
// in counterclockwise order around their common face of the cut lattice,
// starting at (1,0) and ending at the origin; the node for infinity is
// implicit and always last (index nodes.size()+1).  The marked half-line of
// z-edges leaves that face between the origin and (1,0), so queries are
// posed in the neighborhood of the positive x-axis and moved there by
// lattice symmetry when needed.
struct EdgeQuery {
    LatticeKind lattice = LatticeKind::square;
    Point from, to;                             // directed target edge
    std::vector<std::pair<Point, Point>> cuts;  // undirected deleted edges
    std::vector<Point> nodes;                   // finite nodes, CCW, origin last
};

enum class CutState { absent, present };

// One term of the tree-count decomposition: a choice of which cut edges the
// tree uses, and the component partition of the listed nodes after removing
// the target edge and the used cuts from the tree.  Endpoints of unused
// cut edges are never listed; a used cut's endpoint may also be dropped
// when the count is insensitive to its component (see enumerate_cases).
struct CaseSpec {
    std::vector<CutState> states;  // aligned with EdgeQuery::cuts
    Partition partition;           // over 1..n, n = infinity
};

// Canonical text form of the case's partition: parts sorted by smallest
// element, members ascending, e.g. "1,5|2,4|3".  Dropped nodes are simply
// absent.
std::string case_signature(const CaseSpec& c);

// Checks an EdgeQuery and throws InvalidCutSet with a description when it
// is malformed: nodes must be distinct sites beginning with (1,0) and
// ending with the origin, the target must be a lattice edge between nodes,
// cuts must be distinct lattice edges between nodes (not the target, not
// the edge (0,0)-(1,0) the marked line starts at), the node set must be
// exactly the cut and target endpoints plus the origin, and walking the
// face of the cut lattice that the marked line leaves from must visit the
// nodes in exactly the given order.
void validate_query(const EdgeQuery& q);

// All cases of the tree-count decomposition for q.  For every assignment
// of states to the cut edges, the partitions enumerated are those whose
// part graph -- one vertex per part, one abstract edge for the target and
// for each used cut -- is a spanning tree in which removing the target
// edge leaves the origin's part with the `from` side and infinity's part
// with the `to` side.  Partitions that cannot be drawn in the annulus
// contribute zero and are pruned.  Groups of cases that differ only in the
// placement of one cut endpoint are merged, with that endpoint dropped,
// when every placement is either a case of the list or contributes zero.
std::vector<CaseSpec> enumerate_cases(const EdgeQuery& q);

// The probability that the walk traverses q.from -> q.to, computed by
// deleting the cut edges from the kernel, summing grove ratios over the
// cases, and multiplying by the surviving-tree fraction of the cuts.
ExactValue edge_intensity(const EdgeQuery& q);

// Reversal: given P_{v,w}, returns P_{w,v} = P_{v,w} - c (gbar_{0,v} -
// gbar_{0,w}) with c the conductance of the edge (1 on our lattices).
ExactValue reverse_intensity(LatticeKind lat, Point v, Point w, const ExactValue& p_vw);

// The built-in query for target v -> w, when (v, w) is one of the prepared
// positions near the positive x-axis; nullopt otherwise.
std::optional<EdgeQuery> preset_query(LatticeKind lat, Point v, Point w);

// The point symmetries of the lattice fixing the origin, as row-major
// integer matrices {a, b, c, d} acting by (x, y) -> (ax+by, cx+dy): the
// dihedral group of order 8, 12 or 6.
std::vector<std::array<int, 4>> point_symmetries(LatticeKind lat);

// P_{v,w} for an arbitrary lattice edge, resolved by moving (v, w) onto a
// preset with a point symmetry, reversing when only (w, v) is prepared.
// Throws Error when no preset covers the orbit.
ExactValue directed_intensity(LatticeKind lat, Point v, Point w);

// P_{v,w} + P_{w,v}: the probability that the walk uses the edge {v, w}
// in either direction.
ExactValue undirected_intensity(LatticeKind lat, Point a, Point b);

// The probability that the walk visits w: the sum of the incoming directed
// intensities, plus 1 at the origin itself.
ExactValue vertex_intensity(LatticeKind lat, Point w);

}  // namespace groves
