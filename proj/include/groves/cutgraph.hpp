#pragma once

#include <utility>
#include <vector>

#include "groves/exact_value.hpp"
#include "groves/lattice.hpp"
#include "groves/linalg.hpp"

namespace groves {

// Kernel data for a lattice graph with finitely many edges deleted.  A
// context holds the restriction of gbar and its marked-line derivative to a
// finite vertex window, together with the list of cuts applied so far and
// the accumulated spanning-tree-count ratio.  Contexts are immutable:
// cut_edge returns a new context, so sharing across threads is safe.
//
// Ring closure: entries live in Q[1/pi] resp. Q[sqrt(3)/pi].  Deleting an
// edge divides by the scalar a_{s,t} = g_ss + g_tt - 2 g_st - 1/c, which is
// rational for the first cut of a fresh lattice context (the diagonal of
// gbar vanishes) and for every cut of a rational kernel, so those updates
// are exact.  A further cut whose a_{s,t} has a transcendental part would
// leave the polynomial ring; the exact division then throws Error rather
// than return an approximation.
class CutContext {
public:
    LatticeKind lattice() const { return lat_; }
    const std::vector<Point>& window() const { return window_; }
    bool contains(Point p) const;

    // Kernel entries; g is symmetric, gp antisymmetric with zero diagonal.
    ExactValue green(Point u, Point v) const;
    ExactValue green_prime(Point u, Point v) const;

    // Accumulated Z^cut / Z: the fraction of spanning trees avoiding every
    // cut edge so far.  1 for a fresh context.
    ExactValue z_ratio() const { return zratio_; }

    const std::vector<std::pair<Point, Point>>& cuts() const { return cuts_; }
    // True when {s,t} is a lattice edge not yet removed.
    bool edge_present(Point s, Point t) const;

    // Remaining neighbors of p (lattice neighbors minus cut edges).
    std::vector<Point> neighbors(Point p) const;

private:
    LatticeKind lat_ = LatticeKind::square;
    std::vector<Point> window_;
    Matrix<ExactValue> g_, gp_;
    std::vector<std::pair<Point, Point>> cuts_;
    ExactValue zratio_ = ExactValue(1);

    size_t index(Point p) const;

    friend CutContext fresh_context(LatticeKind, const std::vector<Point>&);
    friend CutContext cut_edge(const CutContext&, Point, Point, const Rational&);
};

// Fills g and gp from the whole-plane kernels; zratio starts at 1.  The
// window must consist of distinct lattice sites and is never grown by later
// operations, so it has to contain every vertex the caller will query.
CutContext fresh_context(LatticeKind lat, const std::vector<Point>& window);

// Deletes lattice edge {s,t}.  Both endpoints must lie in the window, the
// pair must be a lattice edge not previously cut (else InvalidCutSet), and
// a_{s,t} must be nonzero (else DegenerateCut: the edge is forced, as for a
// bridge).  The conductance of a lattice edge is 1; passing 0 is the
// continuous limit of removing a vanishing edge and returns the context
// unchanged.  When {s,t} is a marked edge, the derivative update carries
// the extra transport-derivative terms.
CutContext cut_edge(const CutContext& ctx, Point s, Point t,
                    const Rational& conductance = Rational(1));

// Value equality of two contexts: same lattice, window, cut set (order
// ignored), and identical kernel entries and z-ratio.
bool equivalent(const CutContext& a, const CutContext& b);

// One edge-deletion step on plain kernel matrices (indices s, t into the
// matrix), for kernels not tied to a lattice window: applies
//   g    -> g - (g_{.s}-g_{.t})(g_{s.}-g_{t.}) / a,
//   gp   -> gp - [(gp_{.s}-gp_{.t}+tau' g_{.t})(g_{s.}-g_{t.})
//                 + (g_{.s}-g_{.t})(gp_{s.}-gp_{t.}-tau' g_{t.})] / a,
//   a = g_ss + g_tt - 2 g_st - 1/c,
// where tau' is the z-derivative of the edge's marked-line transport (+-1
// for a marked edge, 0 otherwise), and returns the tree-count ratio
// 1 - c (g_ss + g_tt - 2 g_st) = -c a.  gp may be null when no derivative
// is tracked.  Throws DegenerateCut when a = 0 and Error when a division
// is not exact in the coefficient ring.
ExactValue cut_kernel_pair(Matrix<ExactValue>& g, Matrix<ExactValue>* gp,
                           size_t s, size_t t, const Rational& c, int tau_prime);

}  // namespace groves
