#include "wlkit/atomic_type.hpp"

#include <stdexcept>

namespace wlkit {

bool AtomicType::operator==(const AtomicType& other) const {
    if (k != other.k || adjacency_part != other.adjacency_part) return false;
    for (int i = 0; i < k; ++i) {
        if (!bitwise_equal(feature_part[static_cast<std::size_t>(i)],
                           other.feature_part[static_cast<std::size_t>(i)]))
            return false;
    }
    if (edge_feature_part.has_value() != other.edge_feature_part.has_value()) return false;
    if (edge_feature_part) {
        for (std::size_t c = 0; c < edge_feature_part->size(); ++c) {
            if (!bitwise_equal((*edge_feature_part)[c], (*other.edge_feature_part)[c])) return false;
        }
    }
    return true;
}

AtomicType atomic_type(const Graph& g, const KTuple& t) {
    const int k = t.k();
    if (k < 1) throw std::invalid_argument("atomic_type: tuple must have k >= 1 entries");
    for (int v : t.entries) {
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("atomic_type: tuple entry " + std::to_string(v) + " out of range");
    }

    AtomicType at;
    at.k = k;
    at.feature_part.reserve(static_cast<std::size_t>(k));
    for (int v : t.entries) {
        if (g.has_node_features()) {
            auto f = g.node_feature(v);
            at.feature_part.emplace_back(f.begin(), f.end());
        } else {
            at.feature_part.push_back({1.0});
        }
    }

    at.adjacency_part.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (g.has_edge(t.entries[static_cast<std::size_t>(i)], t.entries[static_cast<std::size_t>(j)]))
                at.adjacency_part[static_cast<std::size_t>(i * k + j)] = 1;
        }
    }

    if (g.has_edge_features()) {
        at.edge_feature_part.emplace(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (at.adjacency_part[static_cast<std::size_t>(i * k + j)]) {
                    auto f = g.edge_feature(t.entries[static_cast<std::size_t>(i)],
                                            t.entries[static_cast<std::size_t>(j)]);
                    (*at.edge_feature_part)[static_cast<std::size_t>(i * k + j)].assign(f.begin(), f.end());
                }
            }
        }
    }
    return at;
}

}  // namespace wlkit
