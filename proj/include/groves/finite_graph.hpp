#pragma once

#include <map>
#include <string>
#include <vector>

#include "groves/linalg.hpp"
#include "groves/polyz.hpp"
#include "groves/rational.hpp"

namespace groves {

// Laurent polynomial in the transport variable z with rational coefficients.
// Grove sums with winding decorations live here.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(const Rational& c) { add(0, c); }  // NOLINT
    LaurentZ(long n) : LaurentZ(Rational(n)) {}  // NOLINT

    static LaurentZ monomial(int k, const Rational& c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;

    Rational eval_one() const;          // value at z = 1
    LaurentZ reciprocal_arg() const;    // substitute z -> 1/z
    RatFuncZ to_ratfunc() const;

    LaurentZ operator-() const;
    LaurentZ& operator+=(const LaurentZ& o);
    LaurentZ& operator-=(const LaurentZ& o);
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
    friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    LaurentZ& operator*=(const LaurentZ& o) { return *this = *this * o; }

    friend bool operator==(const LaurentZ& a, const LaurentZ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }

    std::string str() const;

private:
    void add(int k, const Rational& c);
    std::map<int, Rational> c_;
};

// Undirected edge of conductance c.  A nonzero zip exponent marks an edge
// crossed by the zipper: traversing the edge from u to v multiplies a walk
// or path weight by z^zip, and the bundle Laplacian gets
// Delta[u][v] = -c z^{-zip}, Delta[v][u] = -c z^{+zip}.
struct GraphEdge {
    int u = 0, v = 0;
    Rational c = Rational(1);
    int zip = 0;
};

// Finite network with a wired/boundary vertex and an ordered list of
// distinguished nodes.  For annular-one use the nodes are listed in
// counterclockwise order with the boundary node last.
struct FiniteGraph {
    int vertex_count = 0;
    std::vector<GraphEdge> edges;
    int boundary = -1;
    std::vector<int> nodes;
};

// Checks vertex ranges, distinct node ids, simple edges, connectivity.
void validate_graph(const FiniteGraph& g);

// Exact Green's function of the bundle Laplacian with the Dirichlet
// condition at g.boundary: a vertex_count x vertex_count matrix over
// rational functions of z whose boundary row and column are zero.
Matrix<RatFuncZ> exact_green(const FiniteGraph& g);

// Response matrix onto g.nodes: the negated Schur complement of the bundle
// Laplacian after eliminating every non-node vertex.
Matrix<RatFuncZ> response_matrix(const FiniteGraph& g);

// Identifies vertex b with vertex a and discards b (dropping any edges that
// become loops).  Vertex indices above b shift down by one.
FiniteGraph merge_vertices(const FiniteGraph& g, int a, int b);

// Number of spanning trees, weighted by conductance products (zip exponents
// play no role at z = 1).
Rational count_spanning_trees(const FiniteGraph& g);

}  // namespace groves
