#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Isomorphism type of a k-tuple: the initial color hash(G[v]) is injective
/// on these. Two tuples share an atomic type exactly when their node features
/// match position-wise and their pairwise adjacency (and edge-feature)
/// patterns match. The within-tuple equality pattern is deliberately NOT part
/// of the type; the equality-aware mode adds it at serialization time only.
struct AtomicType {
    int k = 0;
    /// One feature vector per tuple position. Featureless graphs carry the
    /// uniform placeholder feature [1.0] at every position.
    std::vector<FeatureVector> feature_part;
    /// k*k row-major 0/1 indicators; symmetric with zero diagonal.
    std::vector<std::uint8_t> adjacency_part;
    /// Present only when the graph has edge features: k*k row-major vectors,
    /// empty at non-adjacent cells and on the diagonal.
    std::optional<std::vector<FeatureVector>> edge_feature_part;

    bool operator==(const AtomicType& other) const;
};

/// Computes the atomic type of tuple t in g. Throws on out-of-range entries
/// or empty tuples.
AtomicType atomic_type(const Graph& g, const KTuple& t);

}  // namespace wlkit
