#include "wlkit/coloring.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wlkit {

Histogram histogram(const Coloring& c) {
    Histogram h;
    for (ColorId id : c.colors) ++h[id];
    return h;
}

std::size_t class_count(const Coloring& c) {
    std::unordered_set<ColorId> seen(c.colors.begin(), c.colors.end());
    return seen.size();
}

bool same_partition(const Coloring& a, const Coloring& b) {
    if (a.domain_size() != b.domain_size())
        throw std::invalid_argument("same_partition: domain sizes differ");
    std::unordered_map<ColorId, ColorId> ab, ba;
    for (std::size_t i = 0; i < a.colors.size(); ++i) {
        const ColorId x = a.colors[i];
        const ColorId y = b.colors[i];
        auto [it1, fresh1] = ab.emplace(x, y);
        if (!fresh1 && it1->second != y) return false;
        auto [it2, fresh2] = ba.emplace(y, x);
        if (!fresh2 && it2->second != x) return false;
    }
    return true;
}

bool partition_refines(const Coloring& finer, const Coloring& coarser) {
    if (finer.domain_size() != coarser.domain_size())
        throw std::invalid_argument("partition_refines: domain sizes differ");
    std::unordered_map<ColorId, ColorId> to_coarse;
    for (std::size_t i = 0; i < finer.colors.size(); ++i) {
        auto [it, fresh] = to_coarse.emplace(finer.colors[i], coarser.colors[i]);
        if (!fresh && it->second != coarser.colors[i]) return false;
    }
    return true;
}

}  // namespace wlkit
