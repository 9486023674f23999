#pragma once

#include <string>
#include <vector>

#include "groves/exact_value.hpp"
#include "groves/lattice.hpp"
#include "groves/lattice_kind.hpp"

namespace groves {

// One additive term in the closed-form evaluation of gbar_prime, kept for
// auditing.  The derivative is assembled as half of a telescoping sum over
// the faces between the half-turn frame of (u, v) and (u, v) itself; each
// event records one term and where it came from.  Contract: the
// contributions of all logged events sum to exactly 2 * gbar_prime(u, v).
struct ZipperEvent {
    enum class Kind {
        rotate,            // reframing through the half-turn (weight zero)
        step_edge,         // master term of one oriented face-edge
        sweep,             // column boundary passing over u or v
        line_flip,         // west-side indicator mismatch of the rotated pair
        neighbor_average,  // hexagonal same-class harmonic average at v
    };

    Kind kind;
    Point a, b;  // the oriented edge (a -> b) for step_edge, else the points involved
    ExactValue contribution;
    std::string note;
};

// Derivative at z = 1 of the zippered whole-plane kernel.  When every edge
// crossing the marked half-line (see zipper_transport) carries conductance
// z in the canonical direction, the inverse-Laplacian surrogate gbar
// becomes a function of z; gbar_prime(u, v) is d/dz of its (u, v) entry at
// z = 1.  Equivalently it is the sum over marked edges (a -> b) of
//   -(gbar(u,a) gbar(b,v) - gbar(u,b) gbar(a,v)),
// which the closed form telescopes against the lattice half-turn so only
// O(|u| + |v|) kernel lookups remain.  Exact in Q[1/pi] (square) or
// Q[sqrt(3)/pi] (triangular, hexagonal); antisymmetric in (u, v) and zero
// on the diagonal.
ExactValue gbar_prime(LatticeKind lat, Point u, Point v,
                      std::vector<ZipperEvent>* log = nullptr);

// Direct numeric evaluation: the partial sum of the marked-edge series
// through distance `radius` down the half-line, using the numeric kernel.
// Converges like 1/radius; serves as the oracle for the closed form.
double gbar_prime_numeric(LatticeKind lat, Point u, Point v, int radius);

}  // namespace groves
