#pragma once

#include <vector>

#include "groves/linalg.hpp"
#include "groves/pairings.hpp"
#include "groves/polyz.hpp"

namespace groves {

/// Linear system tying minors of the response matrix of an annular-one graph
/// (nodes 1..n-1 counterclockwise on the inner boundary, node n alone on the
/// outer boundary, zipper through the gap between nodes n-1 and 1) to its
/// weighted connection sums.
///
/// Row i carries the label rows[i] = L_{R}^{S}, meaning the minor
/// det L_R^S of the response matrix with ordered row set R and column set S.
/// Column j carries the canonically directed annular pairing cols[j].
/// Expanding every minor into permutation terms, discarding the terms whose
/// connection type cannot embed in the annulus, and rewriting each survivor
/// as a power of zeta = z^2 times the canonically directed sum yields
///
///     det L_R^S  =  sum_j entries[i][j](zeta) * Z[cols[j]] / Z[1|2|...|n],
///
/// exactly as rational functions of the zipper variable z.  Each entry is 0
/// or a signed power of zeta: the sign is the parity of the permutation the
/// pairing induces between R and S, and the zeta power counts pairs used
/// against their canonical direction while crossing the zipper.
struct AnnularMatrix {
    int n = 0;
    std::vector<RowIndex> rows;
    std::vector<DirectedPairing> cols;
    /// Square of size binomial(n, n/2) / 2; polynomial variable is zeta.
    Matrix<PolyZ> entries;
};

/// Connection system for even n >= 2.  Results are cached; the reference
/// stays valid for the lifetime of the process.  Throws Error for odd or
/// non-positive n.
const AnnularMatrix& build_An(int n);

/// Largest n accepted by invert_An.
inline constexpr int kAnnularInversionCap = 10;

/// Exact inverse of build_An(n).entries over the rational functions of zeta.
/// Row index = column (pairing) of the system, column index = row (minor
/// label), so inverse[p][m] is the coefficient of minor m in the expression
/// of pairing p.  Cached like build_An.  Throws TooLarge past the cap and
/// propagates SingularMatrix if the system were ever degenerate.
const Matrix<RatFuncZ>& invert_An(int n);

}  // namespace groves
