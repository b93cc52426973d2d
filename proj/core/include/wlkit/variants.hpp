#pragma once

#include <span>
#include <string>

#include "wlkit/algorithm.hpp"
#include "wlkit/coloring.hpp"
#include "wlkit/graph.hpp"

namespace wlkit {

/// Rejects combinations the algorithm cannot express; in particular 1-WL on
/// edge-featured graphs (only the k >= 2 tests consume edge features).
void validate_graph_support(const AlgorithmDescriptor& alg, const Graph& g);

// Phase-1 signature builders. Object indices are nodes (WL1) or row-major
// tuple indices. Each call fills out[i] for i in [begin, end); slots are
// written independently, so disjoint ranges may run on parallel workers.
// Signatures depend only on (alg, g) resp. (alg, g, prev): bit-identical
// regardless of how the range is split.
void build_init_signatures(const AlgorithmDescriptor& alg, const Graph& g,
                           std::size_t begin, std::size_t end, std::span<std::string> out);
void build_round_signatures(const AlgorithmDescriptor& alg, const Graph& g, const Coloring& prev,
                            std::size_t begin, std::size_t end, std::span<std::string> out);

/// Initial coloring: c^0_v = hash(X_v) for 1-WL, c^0_t = hash(G[t]) for the
/// k-dimensional tests (atomic types over all n^k tuples).
Coloring init_colors(const AlgorithmDescriptor& alg, const Graph& g, ColorTable& ct);

/// One 1-WL update: c_v <- hash(prev_v, {{prev_w : w in N(v)}}).
Coloring wl1_round(const Graph& g, const Coloring& prev, ColorTable& ct);

/// One k-WL update: the i-th neighborhood multiset ranges over all n tuples
/// obtained by substituting position i (the replacement w = v_i included);
/// the k multisets enter the hash in position order.
Coloring kwl_round(const Graph& g, int k, const Coloring& prev, ColorTable& ct);

/// One k-FWL update: for each node w the ORDERED k-vector of substituted-
/// tuple colors; only the outer collection over w is a multiset.
Coloring kfwl_round(const Graph& g, int k, const Coloring& prev, ColorTable& ct);

}  // namespace wlkit
