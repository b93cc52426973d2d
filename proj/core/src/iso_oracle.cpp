#include "wlkit/iso_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlkit/bytes.hpp"

namespace wlkit {

namespace {

// Effective node feature bytes: the anonymous setting is represented by the
// uniform feature [1.0], so a featureless graph equals an explicitly
// all-[1.0]-featured one. Edge-feature presence, by contrast, is part of the
// graph's identity.
std::string node_key(const Graph& g, int v) {
    std::string out;
    if (g.has_node_features()) {
        for (double x : g.node_feature(v)) bytes::put_f64(out, x);
    } else {
        bytes::put_f64(out, 1.0);
    }
    return out;
}

bool effective_nodes_equal(const Graph& g1, int v, const Graph& g2, int u) {
    return node_key(g1, v) == node_key(g2, u);
}

bool edge_features_equal(const Graph& g1, int a, int b, const Graph& g2, int x, int y) {
    if (!g1.has_edge_features()) return true;
    return bitwise_equal(g1.edge_feature(a, b), g2.edge_feature(x, y));
}

// Witness verification without Graph::operator==, which is strict about
// node-feature presence.
bool verify_witness(const Graph& g1, const Graph& g2, const Permutation& p) {
    std::vector<EdgeKey> mapped;
    mapped.reserve(g1.edge_count());
    for (const auto& [u, v] : g1.edges()) mapped.push_back(make_edge_key(p(u), p(v)));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != g2.edges()) return false;
    for (int v = 0; v < g1.node_count(); ++v)
        if (!effective_nodes_equal(g1, v, g2, p(v))) return false;
    if (g1.has_edge_features()) {
        for (const auto& [key, value] : g1.edge_features())
            if (!bitwise_equal(value, g2.edge_feature(p(key.first), p(key.second)))) return false;
    }
    return true;
}

struct SearchContext {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> order;     // g1 nodes, high degree first
    std::vector<int> mapping;   // g1 node -> g2 node or -1
    std::vector<bool> used;     // g2 node taken
    std::vector<std::string> keys1, keys2;

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        for (int u = 0; u < g2.node_count(); ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            if (g1.degree(v) != g2.degree(u)) continue;
            if (keys1[static_cast<std::size_t>(v)] != keys2[static_cast<std::size_t>(u)]) continue;
            bool compatible = true;
            for (std::size_t q = 0; q < pos; ++q) {
                const int w = order[q];
                const int x = mapping[static_cast<std::size_t>(w)];
                const bool e1 = g1.has_edge(v, w);
                if (e1 != g2.has_edge(u, x)) {
                    compatible = false;
                    break;
                }
                if (e1 && !edge_features_equal(g1, v, w, g2, u, x)) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            mapping[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = true;
            if (extend(pos + 1)) return true;
            mapping[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(u)] = false;
        }
        return false;
    }
};

}  // namespace

IsoWitness is_isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.node_count();
    if (n != g2.node_count()) return {};
    if (n > kIsoNodeLimit)
        throw std::invalid_argument("is_isomorphic: node count " + std::to_string(n) +
                                    " exceeds the oracle limit of " + std::to_string(kIsoNodeLimit));
    if (g1.edge_count() != g2.edge_count()) return {};
    if (g1.has_edge_features() != g2.has_edge_features()) return {};

    // Invariant pruning: degree sequence and node-key multiset.
    std::vector<int> deg1, deg2;
    for (int v = 0; v < n; ++v) {
        deg1.push_back(g1.degree(v));
        deg2.push_back(g2.degree(v));
    }
    std::vector<int> sorted1 = deg1, sorted2 = deg2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return {};

    SearchContext ctx{g1, g2, {}, {}, {}, {}, {}};
    for (int v = 0; v < n; ++v) {
        ctx.keys1.push_back(node_key(g1, v));
        ctx.keys2.push_back(node_key(g2, v));
    }
    {
        auto k1 = ctx.keys1, k2 = ctx.keys2;
        std::sort(k1.begin(), k1.end());
        std::sort(k2.begin(), k2.end());
        if (k1 != k2) return {};
    }

    ctx.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ctx.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(ctx.order.begin(), ctx.order.end(),
                     [&](int a, int b) { return deg1[static_cast<std::size_t>(a)] > deg1[static_cast<std::size_t>(b)]; });
    ctx.mapping.assign(static_cast<std::size_t>(n), -1);
    ctx.used.assign(static_cast<std::size_t>(n), false);

    if (!ctx.extend(0)) return {};

    Permutation p(ctx.mapping);
    if (!verify_witness(g1, g2, p))
        throw std::logic_error("is_isomorphic: search returned an invalid witness");
    return {true, std::move(p)};
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > kEnumNodeLimit)
        throw std::invalid_argument("enumerate_graphs: n must be in 1.." + std::to_string(kEnumNodeLimit));
    std::vector<EdgeKey> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});

    std::vector<Graph> graphs;
    graphs.reserve(std::size_t{1} << pairs.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
        std::vector<EdgeKey> edges;
        for (std::size_t bit = 0; bit < pairs.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) edges.push_back(pairs[bit]);
        graphs.push_back(Graph::build(n, std::move(edges)));
    }
    return graphs;
}

}  // namespace wlkit
