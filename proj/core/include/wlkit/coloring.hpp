#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wlkit/color_table.hpp"

namespace wlkit {

/// One round's color assignment. Domain is the n nodes for 1-WL and the n^k
/// tuples (row-major index) for the k-dimensional tests.
struct Coloring {
    std::vector<ColorId> colors;

    std::size_t domain_size() const { return colors.size(); }
    bool operator==(const Coloring&) const = default;
};

/// Multiset of colors as ColorId -> multiplicity. Ordered map so serialized
/// output is deterministic.
using Histogram = std::map<ColorId, std::size_t>;

Histogram histogram(const Coloring& c);
std::size_t class_count(const Coloring& c);

/// True iff the level-set partitions coincide (color names may differ).
/// Throws on domain-size mismatch.
bool same_partition(const Coloring& a, const Coloring& b);

/// True iff every class of `finer` is contained in one class of `coarser`.
bool partition_refines(const Coloring& finer, const Coloring& coarser);

}  // namespace wlkit
