#pragma once

#include <cstdint>

#include "groves/finite_graph.hpp"

namespace groves {

// Tallies of identities verified between the response matrix of a graph and
// direct grove enumeration; every identity holds identically in z or the
// check throws.
struct ResponseCheckReport {
    int green_entries = 0;         // Schur response vs -(node Green block)^{-1}
    int entry_identities = 0;      // off-diagonal entries vs two-node pairings
    int principal_identities = 0;  // principal minors vs singleton groves
    int mixed_identities = 0;      // mixed minors vs signed pairing sums
};

// Cross-validates the three grove interpretations of the response matrix:
// entries, principal minors over every proper node subset, and a sample of
// mixed minors with interior ("unlisted") nodes, each against
// enumerate_groves.  Also confirms the response matrix equals the negated
// inverse of the Green's function restricted to the non-boundary nodes.
// The boundary vertex must be one of the nodes.  Throws MismatchReport on
// any failed identity and TooLarge on graphs beyond the enumeration caps.
ResponseCheckReport check_response_theorems(const FiniteGraph& g, std::uint64_t seed = 1,
                                            int mixed_samples = 12);

}  // namespace groves
