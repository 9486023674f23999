#pragma once

#include "groves/exact_value.hpp"
#include "groves/lattice.hpp"
#include "groves/lattice_kind.hpp"

namespace groves {

// Norm used for the table window: square max(|x|, |y|); triangular and
// hexagonal max(|x|, |y|, |x + y|) (the axial-coordinate hex-grid radius).
int lattice_norm(LatticeKind lat, Point p);

// Potential kernel a(p) of the simple random walk with unit conductances,
// normalized against the graph Laplacian Delta f(v) = sum_{w ~ v} (f(v)-f(w)):
// a(0) = 0 and (Delta a)(v) = -[v = 0], so a(p) ~ log|p| times a
// lattice constant at infinity.  Values are exact elements of Q[1/pi]
// (square) or Q[sqrt(3)/pi] (triangular, hexagonal); nearest neighbors get
// 1/degree.  Tables are filled once per lattice (thread-safe) out to
// `window`; throws WindowExceeded when lattice_norm(p) > window and, for the
// hexagonal lattice, Error when p is not a site.
ExactValue potential_kernel(LatticeKind lat, Point p, int window = 64);

// Whole-plane Green-function surrogate: gbar(u, v) = -a(u - v), the kernel
// whose Laplacian in each variable is the identity minus a uniform escape
// to infinity.  For the hexagonal lattice the two site classes are related
// by a half-turn, so the difference is taken class-aware; gbar is symmetric
// on every lattice.
ExactValue gbar(LatticeKind lat, Point u, Point v, int window = 64);

// Independent floating-point evaluation of a(p) by a one-dimensional
// integral (the Fourier representation of the kernel, with the angular
// variable integrated out in closed form).  Accurate to ~1e-10 relative at
// any distance; used as the oracle for the exact tables.
double potential_kernel_numeric(LatticeKind lat, Point p);

// Numeric counterpart of gbar, same conventions.
double gbar_numeric(LatticeKind lat, Point u, Point v);

}  // namespace groves
