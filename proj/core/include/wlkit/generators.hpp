#pragma once

#include <cstdint>
#include <random>

#include "wlkit/graph.hpp"

namespace wlkit {

// Deterministic graph families for tests and benchmarks. Every random family
// produces identical output for identical (params, seed) on any platform.

/// Cycle graph C_n, n >= 3. Nodes i and (i+1) mod n are adjacent.
Graph make_cycle(int n);

/// Complete graph K_n, n >= 1.
Graph make_complete(int n);

/// Disjoint union; the nodes of b are shifted by a.node_count(). Both inputs
/// must agree on feature presence and dimensions.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random d-regular graph via the pairing model, rejecting matchings with
/// loops or multi-edges. Requires 0 <= d < n and n*d even.
Graph random_regular(int n, int d, std::uint64_t seed);

Permutation random_permutation(int n, std::mt19937_64& rng);
Permutation random_permutation(int n, std::uint64_t seed);

}  // namespace wlkit
