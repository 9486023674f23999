#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "groves/exact_value.hpp"
#include "groves/lattice_kind.hpp"

namespace groves {

// Integer lattice coordinates.  Square: the usual Z^2.  Triangular: axial
// coordinates, neighbors +-(1,0), +-(0,1), +-(1,-1), planar embedding
// (x + y/2, y*sqrt(3)/2).  Hexagonal: the sites of the triangular grid with
// (x + y) mod 3 in {0, 1} under the embedding (x - y/2, y*sqrt(3)/2); class-0
// sites neighbor +(1,0), +(0,1), -(1,1) and class-1 sites the reverse.
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    Point operator-() const { return {-x, -y}; }
};

struct PointHash {
    size_t operator()(const Point& p) const {
        return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^
                                      static_cast<unsigned>(p.y));
    }
};

// Vertex degree: 4, 6 or 3.
int lattice_degree(LatticeKind lat);

// Ring the lattice's exact kernel values live in: Q[1/pi] for the square
// lattice, Q[sqrt(3)/pi] for the triangular and hexagonal ones.
Generator lattice_generator(LatticeKind lat);

// Whether p indexes a vertex (only the hexagonal lattice rejects points).
bool is_site(LatticeKind lat, Point p);

// 0 or 1: (x + y) mod 3 for a hexagonal site.  Adjacent sites differ.
int hex_class(Point p);

// The neighbors of p, in the order used by random-walk sampling.
std::vector<Point> lattice_neighbors(LatticeKind lat, Point p);

// The marked half-line of edges carrying the deformation parameter z runs
// from the face next to the origin off to the south; crossing it multiplies
// edge weights by z or 1/z.  Returns +1 if (a -> b) is a marked edge in its
// canonical direction, -1 for the reverse, 0 for unmarked pairs.
//   square:      ((0,-k) -> (1,-k)),                      k >= 0
//   triangular:  ((0,-k) -> (1,-k)), ((0,-k) -> (1,-k-1)), k >= 0
//   hexagonal:   ((-k,-2k) -> (1-k,-2k)),                  k >= 0
int zipper_transport(LatticeKind lat, Point a, Point b);

// Half-turn of the lattice about the start of the marked line: square
// p -> (1,1)-p (center of the face east of the topmost marked edge),
// triangular p -> (1,0)-p (midpoint of the topmost marked edge), hexagonal
// p -> (2,2)-p (center of the adjacent face; swaps the site classes).  Sends
// the marked half-line to its northward mirror image.
Point rotate_about_start_face(LatticeKind lat, Point p);

// Side test for the vertical line through the start face: true when p lies
// on the west side (square/triangular x <= 0, hexagonal 2x - y <= 0).  The
// marked edges cross exactly this line.
bool west_of_start_line(LatticeKind lat, Point p);

}  // namespace groves
