#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wlkit {

/// Unordered edge key, always stored with the smaller endpoint first.
using EdgeKey = std::pair<int, int>;
using FeatureVector = std::vector<double>;
using EdgeFeatureMap = std::map<EdgeKey, FeatureVector>;

inline EdgeKey make_edge_key(int u, int v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

/// Feature vectors are labels, not measurements: they compare by the exact
/// bit pattern of their components (so -0.0 != 0.0 and NaNs compare by payload).
bool bitwise_equal(std::span<const double> a, std::span<const double> b);

/// Simple undirected graph on nodes 0..n-1 with optional node and edge
/// features. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Validates, deduplicates and symmetrizes the edge list. Throws
    /// std::invalid_argument on out-of-range endpoints, self-loops,
    /// inconsistent feature dimensions, or edge-feature keys that are not
    /// edges of the graph.
    static Graph build(int n, std::vector<EdgeKey> edges,
                       std::optional<std::vector<FeatureVector>> node_features = std::nullopt,
                       std::optional<EdgeFeatureMap> edge_features = std::nullopt);

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Canonical edge list: (u, v) with u < v, sorted ascending.
    const std::vector<EdgeKey>& edges() const { return edges_; }

    /// Sorted adjacency list of v.
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool has_node_features() const { return node_features_.has_value(); }
    int node_feature_dim() const;
    std::span<const double> node_feature(int v) const;

    bool has_edge_features() const { return edge_features_.has_value(); }
    int edge_feature_dim() const;
    std::span<const double> edge_feature(int u, int v) const;
    const EdgeFeatureMap& edge_features() const;

    /// Exact equality: identical node count, edge set, and features
    /// (features bitwise, presence included).
    bool operator==(const Graph& other) const;

private:
    void check_node(int v) const;

    int n_ = 0;
    std::vector<EdgeKey> edges_;
    std::vector<int> adj_offsets_{0};
    std::vector<int> adj_;
    std::optional<std::vector<FeatureVector>> node_features_;
    std::optional<EdgeFeatureMap> edge_features_;
};

/// Bijection on 0..n-1.
class Permutation {
public:
    explicit Permutation(std::vector<int> mapping);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& mapping() const { return map_; }
    Permutation inverse() const;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

/// Relabels nodes: edge (u,v) maps to (p(u),p(v)); features follow their
/// nodes and edges. Throws on size mismatch.
Graph apply_permutation(const Graph& g, const Permutation& p);

/// Ordered tuple of k node indices, repetitions allowed.
struct KTuple {
    std::vector<int> entries;

    KTuple() = default;
    KTuple(std::initializer_list<int> init) : entries(init) {}
    explicit KTuple(std::vector<int> e) : entries(std::move(e)) {}

    int k() const { return static_cast<int>(entries.size()); }
    bool operator==(const KTuple&) const = default;
};

KTuple apply_permutation(const KTuple& t, const Permutation& p);

/// Hard cap on refinement domain sizes (n^k); keeps memory at desk scale.
inline constexpr std::size_t kMaxDomainSize = std::size_t{1} << 26;

/// n^k with overflow/cap checking.
std::size_t pow_domain(int n, int k);

/// Row-major tuple index: (v_1..v_k) -> sum v_i * n^(k-i). Tuple order in
/// every coloring and trace follows this indexing.
std::size_t tuple_to_index(std::span<const int> entries, int n);
void tuple_from_index(std::size_t index, int n, int k, std::span<int> out);

}  // namespace wlkit
