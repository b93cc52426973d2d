#include "wlkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace wlkit {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
    }
    return true;
}

Graph Graph::build(int n, std::vector<EdgeKey> edges,
                   std::optional<std::vector<FeatureVector>> node_features,
                   std::optional<EdgeFeatureMap> edge_features) {
    if (n < 0) throw std::invalid_argument("graph: node count must be non-negative");

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (node_features) {
        if (static_cast<int>(node_features->size()) != n)
            throw std::invalid_argument("graph: node_features length " +
                                        std::to_string(node_features->size()) +
                                        " does not match node count " + std::to_string(n));
        for (const auto& f : *node_features) {
            if (f.size() != node_features->front().size())
                throw std::invalid_argument("graph: node feature vectors must share one dimension");
        }
    }

    if (edge_features) {
        for (const auto& [key, value] : *edge_features) {
            if (!std::binary_search(edges.begin(), edges.end(), make_edge_key(key.first, key.second)))
                throw std::invalid_argument("graph: edge-feature key (" + std::to_string(key.first) +
                                            ", " + std::to_string(key.second) + ") is not an edge");
            if (key.first >= key.second)
                throw std::invalid_argument("graph: edge-feature keys must be canonical (u < v)");
            if (value.size() != edge_features->begin()->second.size())
                throw std::invalid_argument("graph: edge feature vectors must share one dimension");
        }
        if (edge_features->size() != edges.size())
            throw std::invalid_argument("graph: edge_features must cover every edge (" +
                                        std::to_string(edge_features->size()) + " of " +
                                        std::to_string(edges.size()) + " present)");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.node_features_ = std::move(node_features);
    g.edge_features_ = std::move(edge_features);

    // CSR adjacency, neighbor lists sorted.
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    g.adj_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::partial_sum(deg.begin(), deg.end(), g.adj_offsets_.begin() + 1);
    g.adj_.resize(g.edges_.size() * 2);
    std::vector<int> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + g.adj_offsets_[static_cast<std::size_t>(v)];
        auto end = g.adj_.begin() + g.adj_offsets_[static_cast<std::size_t>(v) + 1];
        std::sort(begin, end);
    }
    return g;
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: node " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n_) + ")");
}

std::span<const int> Graph::neighbors(int v) const {
    check_node(v);
    const auto lo = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
    const auto hi = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
    return {adj_.data() + lo, hi - lo};
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::node_feature_dim() const {
    if (!node_features_) return 0;
    return n_ == 0 ? 0 : static_cast<int>(node_features_->front().size());
}

std::span<const double> Graph::node_feature(int v) const {
    check_node(v);
    if (!node_features_) throw std::logic_error("graph: no node features present");
    return (*node_features_)[static_cast<std::size_t>(v)];
}

int Graph::edge_feature_dim() const {
    if (!edge_features_ || edge_features_->empty()) return 0;
    return static_cast<int>(edge_features_->begin()->second.size());
}

std::span<const double> Graph::edge_feature(int u, int v) const {
    if (!edge_features_) throw std::logic_error("graph: no edge features present");
    auto it = edge_features_->find(make_edge_key(u, v));
    if (it == edge_features_->end())
        throw std::invalid_argument("graph: no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return it->second;
}

const EdgeFeatureMap& Graph::edge_features() const {
    if (!edge_features_) throw std::logic_error("graph: no edge features present");
    return *edge_features_;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || edges_ != other.edges_) return false;
    if (node_features_.has_value() != other.node_features_.has_value()) return false;
    if (node_features_) {
        for (int v = 0; v < n_; ++v) {
            if (!bitwise_equal((*node_features_)[static_cast<std::size_t>(v)],
                               (*other.node_features_)[static_cast<std::size_t>(v)]))
                return false;
        }
    }
    if (edge_features_.has_value() != other.edge_features_.has_value()) return false;
    if (edge_features_) {
        for (const auto& [key, value] : *edge_features_) {
            auto it = other.edge_features_->find(key);
            if (it == other.edge_features_->end() || !bitwise_equal(value, it->second)) return false;
        }
    }
    return true;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    const int n = static_cast<int>(map_.size());
    std::vector<bool> hit(map_.size(), false);
    for (int image : map_) {
        if (image < 0 || image >= n)
            throw std::invalid_argument("permutation: image " + std::to_string(image) + " out of range");
        if (hit[static_cast<std::size_t>(image)])
            throw std::invalid_argument("permutation: image " + std::to_string(image) + " hit twice");
        hit[static_cast<std::size_t>(image)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int v = 0; v < size(); ++v) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(v)])] = v;
    return Permutation(std::move(inv));
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.node_count())
        throw std::invalid_argument("apply_permutation: permutation size " + std::to_string(p.size()) +
                                    " does not match node count " + std::to_string(g.node_count()));
    std::vector<EdgeKey> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) edges.push_back(make_edge_key(p(u), p(v)));

    std::optional<std::vector<FeatureVector>> node_features;
    if (g.has_node_features()) {
        node_features.emplace(static_cast<std::size_t>(g.node_count()));
        for (int v = 0; v < g.node_count(); ++v) {
            auto f = g.node_feature(v);
            (*node_features)[static_cast<std::size_t>(p(v))].assign(f.begin(), f.end());
        }
    }
    std::optional<EdgeFeatureMap> edge_features;
    if (g.has_edge_features()) {
        edge_features.emplace();
        for (const auto& [key, value] : g.edge_features())
            edge_features->emplace(make_edge_key(p(key.first), p(key.second)), value);
    }
    return Graph::build(g.node_count(), std::move(edges), std::move(node_features), std::move(edge_features));
}

KTuple apply_permutation(const KTuple& t, const Permutation& p) {
    KTuple out;
    out.entries.reserve(t.entries.size());
    for (int v : t.entries) out.entries.push_back(p(v));
    return out;
}

std::size_t pow_domain(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("pow_domain: need n >= 0 and k >= 1");
    std::size_t d = 1;
    for (int i = 0; i < k; ++i) {
        if (n != 0 && d > kMaxDomainSize / static_cast<std::size_t>(n))
            throw std::invalid_argument("pow_domain: n^k exceeds the supported domain cap");
        d *= static_cast<std::size_t>(n);
    }
    if (d > kMaxDomainSize) throw std::invalid_argument("pow_domain: n^k exceeds the supported domain cap");
    return d;
}

std::size_t tuple_to_index(std::span<const int> entries, int n) {
    std::size_t idx = 0;
    for (int v : entries) {
        if (v < 0 || v >= n) throw std::invalid_argument("tuple_to_index: entry out of range");
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    }
    return idx;
}

void tuple_from_index(std::size_t index, int n, int k, std::span<int> out) {
    for (int i = k - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(n));
        index /= static_cast<std::size_t>(n);
    }
}

}  // namespace wlkit
