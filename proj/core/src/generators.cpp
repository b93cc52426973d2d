#include "wlkit/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wlkit/rng.hpp"

namespace wlkit {

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    std::vector<EdgeKey> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.push_back(make_edge_key(i, (i + 1) % n));
    return Graph::build(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
    std::vector<EdgeKey> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::build(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.has_node_features() != b.has_node_features())
        throw std::invalid_argument("disjoint_union: node-feature presence differs");
    if (a.has_node_features() && a.node_feature_dim() != b.node_feature_dim())
        throw std::invalid_argument("disjoint_union: node-feature dimensions differ");
    if (a.has_edge_features() != b.has_edge_features())
        throw std::invalid_argument("disjoint_union: edge-feature presence differs");
    if (a.has_edge_features() && a.edge_feature_dim() != b.edge_feature_dim() &&
        a.edge_count() > 0 && b.edge_count() > 0)
        throw std::invalid_argument("disjoint_union: edge-feature dimensions differ");

    const int shift = a.node_count();
    const int n = shift + b.node_count();
    std::vector<EdgeKey> edges(a.edges());
    for (const auto& [u, v] : b.edges()) edges.push_back({u + shift, v + shift});

    std::optional<std::vector<FeatureVector>> node_features;
    if (a.has_node_features()) {
        node_features.emplace();
        node_features->reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < a.node_count(); ++v) {
            auto f = a.node_feature(v);
            node_features->emplace_back(f.begin(), f.end());
        }
        for (int v = 0; v < b.node_count(); ++v) {
            auto f = b.node_feature(v);
            node_features->emplace_back(f.begin(), f.end());
        }
    }
    std::optional<EdgeFeatureMap> edge_features;
    if (a.has_edge_features()) {
        edge_features.emplace(a.edge_features());
        for (const auto& [key, value] : b.edge_features())
            edge_features->emplace(EdgeKey{key.first + shift, key.second + shift}, value);
    }
    return Graph::build(n, std::move(edges), std::move(node_features), std::move(edge_features));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_gnp: need n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_gnp: need p in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<EdgeKey> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) edges.push_back({u, v});
    return Graph::build(n, std::move(edges));
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_regular: need n >= 1");
    if (d < 0 || d >= n) throw std::invalid_argument("random_regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    if (d == 0) return Graph::build(n, {});

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v * d + i)] = v;

    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        shuffle_vec(stubs, rng);
        std::set<EdgeKey> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            const int u = stubs[i];
            const int v = stubs[i + 1];
            if (u == v || !edges.insert(make_edge_key(u, v)).second) {
                ok = false;
                break;
            }
        }
        if (ok) return Graph::build(n, {edges.begin(), edges.end()});
    }
    throw std::runtime_error("random_regular: pairing model did not converge; parameters too tight");
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
    shuffle_vec(m, rng);
    return Permutation(std::move(m));
}

Permutation random_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_permutation(n, rng);
}

}  // namespace wlkit
