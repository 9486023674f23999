#pragma once

namespace groves {

// The three planar lattices with known walk-intensity closed forms.
// Triangular uses axial coordinates (neighbors +-(1,0), +-(0,1), +-(1,-1));
// hexagonal sites are the triangular sites with (x + y) mod 3 in {0, 1},
// each adjacent to the three nearest sites of the other class.
enum class LatticeKind { square, triangular, hexagonal };

}  // namespace groves
