#pragma once

#include <map>
#include <utility>

#include "groves/exact_value.hpp"
#include "groves/jet.hpp"
#include "groves/multipoly.hpp"
#include "groves/pairings.hpp"

namespace groves {

/// First-order data of the response matrix of an annular-one graph around
/// trivial monodromy: entry (i, j) expands as L_{i,j} + (zeta - 1) L'_{i,j}/2
/// where L is the value at z = 1 (symmetric) and L' the z-derivative there
/// (antisymmetric, zero on the diagonal).  Values are stored once per
/// unordered pair; reads reconstruct the signs.
class ResponseJetTable {
public:
    explicit ResponseJetTable(int n);
    int n() const { return n_; }

    /// Records L_{i,j} = value and L'_{i,j} = z_derivative for the ordered
    /// pair (i, j).  Throws std::invalid_argument for labels outside 1..n or
    /// a nonzero diagonal derivative.
    void set(int i, int j, const ExactValue& value, const ExactValue& z_derivative);

    /// Entry (i, j) as a jet of the requested order in zeta - 1.  Orders
    /// beyond 1 are padded with zeros: the grove expansion never consumes
    /// higher derivatives.  Throws Error if the entry was never set.
    Jet<ExactValue> jet(int i, int j, int order) const;

private:
    int n_;
    std::map<std::pair<int, int>, std::pair<ExactValue, ExactValue>> entries_;
};

/// Same storage for the Green-function variant, with column n replaced by
/// the constant 1.  Reads of (i, n) return the constant-one jet, writes
/// touching index n are rejected, and row n is never readable: the grove
/// expansion only consumes rows 1..n-1 of the substituted matrix.
class GreenJetTable {
public:
    explicit GreenJetTable(int n);
    int n() const { return n_; }

    void set(int i, int j, const ExactValue& value, const ExactValue& z_derivative);
    Jet<ExactValue> jet(int i, int j, int order) const;

private:
    int n_;
    std::map<std::pair<int, int>, std::pair<ExactValue, ExactValue>> entries_;
};

/// Grove ratio Z[sigma] / Z[1|2|...|n] at trivial monodromy, evaluated from
/// response data.  sigma must cover every node of 1..n exactly once across
/// pairs, singletons, and unlisted nodes, with node n in a pair; pair
/// orientation is ignored (the canonical annular direction is recomputed).
/// Pairings that cannot embed in the annulus give exact zero.  Unlisted
/// nodes are contracted into the trees of sigma's components; singletons
/// root their own trees.  Throws PrefixNotZero if the expansion's lower-order
/// terms fail to cancel, and TooLarge when the paired support exceeds the
/// inversion cap.
ExactValue grove_ratio(const PartialPairing& sigma, const ResponseJetTable& table);

/// Grove ratio Z[sigma] / Z[{1,...,n} all connected] from Green data; same
/// contract otherwise.  Here the minors adjoin only sigma's singleton nodes;
/// unlisted nodes drop out of the formula entirely.
ExactValue grove_ratio(const PartialPairing& sigma, const GreenJetTable& table);

enum class GroveBasis { L, G };

/// The grove ratio as a formal polynomial: in basis L over the generators
/// L[i,j] and L'[i,j] (numerator Z[sigma] / Z[1|2|...|n]), in basis G over
/// G[i,j] and G'[i,j] (numerator Z[sigma] / Z[{1,...,n} all connected]).
/// Basis L accepts singletons but no unlisted nodes; basis G requires a
/// complete pairing.  Non-embeddable pairings give the zero polynomial.
MultiPoly grove_polynomial(const PartialPairing& sigma, GroveBasis basis);

/// Probability that a path-in-grove event with weight A + B z (B carried by
/// the configurations making one positive zipper crossing) happened with the
/// crossing, given the first-order jet of the weight in z - 1: the jet is
/// (A + B) + (z - 1) B, so the answer is jet[1] / jet[0].  More generally,
/// for weights sum_k c_k z^k this is the mean crossing number
/// (sum_k k c_k) / (sum_k c_k).  Throws ZeroConstantTerm when the event has
/// zero total weight, and Error if the jet lacks a first-order term.
ExactValue crossing_probability_20(const Jet<ExactValue>& weight);

/// Expected algebraic number of zipper crossings of the paths joining the
/// pairs of sigma, given first-order jets in z - 1 of Z[sigma] and of the
/// reference partition function Z[1|2|...|n]:
/// numerator[1]/numerator[0] - denominator[1]/denominator[0].  sigma is
/// validated (n paired, full coverage) but otherwise only documents which
/// event the jets describe.  Throws ZeroConstantTerm when either constant
/// term vanishes.
ExactValue expected_winding(const PartialPairing& sigma, const Jet<ExactValue>& numerator,
                            const Jet<ExactValue>& denominator);

}  // namespace groves
