#pragma once

#include <optional>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Exact isomorphism decisions are limited to desk scale; the oracle exists
/// to validate the refinement tests, not to compete with them.
inline constexpr int kIsoNodeLimit = 10;
inline constexpr int kEnumNodeLimit = 6;

struct IsoWitness {
    bool isomorphic = false;
    /// Present iff isomorphic: maps g1 nodes to g2 nodes and is verified by
    /// apply_permutation before being returned.
    std::optional<Permutation> permutation;
};

/// Exact isomorphism test by backtracking with degree/feature pruning.
/// Node-count mismatch returns non-isomorphic; node counts above
/// kIsoNodeLimit throw. Featureless graphs compare as if every node carried
/// the uniform feature [1.0], matching the refinement tests' view.
IsoWitness is_isomorphic(const Graph& g1, const Graph& g2);

/// All 2^(n(n-1)/2) labeled simple graphs on n nodes (n <= kEnumNodeLimit),
/// ordered by edge bitmask over the lexicographic pair order
/// (0,1),(0,2),...,(n-2,n-1).
std::vector<Graph> enumerate_graphs(int n);

}  // namespace wlkit
