#pragma once

#include <string>

#include "wlkit/graph.hpp"

namespace wlkit {

enum class Variant { WL1, KWL, KFWL };

/// Which test to run. KWL with k=1 is deliberately allowed: it degenerates to
/// its own initialization after one round (the neighboring tuples carry no
/// edge information), which callers may want to demonstrate.
struct AlgorithmDescriptor {
    Variant variant = Variant::WL1;
    int k = 0;  // 0 for WL1, >= 1 for KWL, >= 2 for KFWL
    bool equality_aware = false;

    static AlgorithmDescriptor wl1();
    static AlgorithmDescriptor kwl(int k, bool equality_aware = false);
    static AlgorithmDescriptor kfwl(int k, bool equality_aware = false);

    /// Throws std::invalid_argument on invalid variant/k combinations.
    void validate() const;

    /// n for WL1, n^k otherwise.
    std::size_t domain_size(const Graph& g) const;

    std::string variant_name() const;  // "wl1" | "kwl" | "kfwl"
    std::string name() const;          // e.g. "kwl(k=2)"

    bool operator==(const AlgorithmDescriptor&) const = default;
};

}  // namespace wlkit
