#include "wlkit/variants.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlkit/bytes.hpp"

namespace wlkit {

AlgorithmDescriptor AlgorithmDescriptor::wl1() { return {Variant::WL1, 0, false}; }
AlgorithmDescriptor AlgorithmDescriptor::kwl(int k, bool equality_aware) {
    return {Variant::KWL, k, equality_aware};
}
AlgorithmDescriptor AlgorithmDescriptor::kfwl(int k, bool equality_aware) {
    return {Variant::KFWL, k, equality_aware};
}

void AlgorithmDescriptor::validate() const {
    switch (variant) {
        case Variant::WL1:
            if (k != 0) throw std::invalid_argument("wl1 takes no dimension k");
            return;
        case Variant::KWL:
            if (k < 1) throw std::invalid_argument("kwl requires k >= 1");
            return;
        case Variant::KFWL:
            if (k < 2) throw std::invalid_argument("kfwl requires k >= 2");
            return;
    }
    throw std::invalid_argument("unknown algorithm variant");
}

std::size_t AlgorithmDescriptor::domain_size(const Graph& g) const {
    if (variant == Variant::WL1) return static_cast<std::size_t>(g.node_count());
    return pow_domain(g.node_count(), k);
}

std::string AlgorithmDescriptor::variant_name() const {
    switch (variant) {
        case Variant::WL1: return "wl1";
        case Variant::KWL: return "kwl";
        case Variant::KFWL: return "kfwl";
    }
    return "?";
}

std::string AlgorithmDescriptor::name() const {
    if (variant == Variant::WL1) return "wl1";
    return variant_name() + "(k=" + std::to_string(k) + ")";
}

void validate_graph_support(const AlgorithmDescriptor& alg, const Graph& g) {
    alg.validate();
    if (alg.variant == Variant::WL1 && g.has_edge_features())
        throw std::invalid_argument("wl1 does not support edge-featured graphs; use kwl or kfwl");
}

namespace {

// Payload tags. Every payload starts with its tag and length-frames all
// variable parts, so distinct update inputs can never serialize equal.
constexpr char kTagInitNode = 'I';
constexpr char kTagInitTuple = 'A';
constexpr char kTagWl1 = 'W';
constexpr char kTagKwl = 'K';
constexpr char kTagKfwl = 'F';

void append_node_feature(const Graph& g, int v, std::string& out) {
    if (g.has_node_features()) {
        auto f = g.node_feature(v);
        bytes::put_u32(out, static_cast<std::uint32_t>(f.size()));
        for (double x : f) bytes::put_f64(out, x);
    } else {
        // Anonymous nodes carry the constant feature 1.
        bytes::put_u32(out, 1);
        bytes::put_f64(out, 1.0);
    }
}

void build_wl1_init(const Graph& g, int v, std::string& out) {
    out.clear();
    out.push_back(kTagInitNode);
    append_node_feature(g, v, out);
}

// Atomic type of the tuple, serialized in place: position-wise features,
// k*k adjacency pattern, edge-feature pattern when the graph carries edge
// features, and (only in equality-aware mode) the within-tuple equality
// pattern.
void build_tuple_init(const Graph& g, std::span<const int> t, bool equality_aware, std::string& out) {
    const int k = static_cast<int>(t.size());
    out.clear();
    out.push_back(kTagInitTuple);
    bytes::put_u32(out, static_cast<std::uint32_t>(k));
    bytes::put_u8(out, equality_aware ? 1 : 0);
    for (int v : t) append_node_feature(g, v, out);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            bytes::put_u8(out, g.has_edge(t[static_cast<std::size_t>(i)],
                                          t[static_cast<std::size_t>(j)]) ? 1 : 0);
    bytes::put_u8(out, g.has_edge_features() ? 1 : 0);
    if (g.has_edge_features()) {
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                const int u = t[static_cast<std::size_t>(i)];
                const int v = t[static_cast<std::size_t>(j)];
                if (g.has_edge(u, v)) {
                    auto f = g.edge_feature(u, v);
                    bytes::put_u32(out, static_cast<std::uint32_t>(f.size()));
                    for (double x : f) bytes::put_f64(out, x);
                }
            }
        }
    }
    if (equality_aware) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                bytes::put_u8(out, t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)] ? 1 : 0);
    }
}

void build_wl1_update(const Graph& g, const Coloring& prev, int v, std::string& out,
                      std::vector<ColorId>& scratch) {
    out.clear();
    out.push_back(kTagWl1);
    bytes::put_u32(out, prev.colors[static_cast<std::size_t>(v)]);
    auto nb = g.neighbors(v);
    scratch.clear();
    for (int w : nb) scratch.push_back(prev.colors[static_cast<std::size_t>(w)]);
    std::sort(scratch.begin(), scratch.end());
    bytes::put_u32(out, static_cast<std::uint32_t>(scratch.size()));
    for (ColorId c : scratch) bytes::put_u32(out, c);
}

// Position strides for row-major tuple indices: replacing entry i of a tuple
// with index T by w lands on T + (w - t[i]) * stride[i].
void fill_strides(int n, int k, std::vector<std::size_t>& strides) {
    strides.assign(static_cast<std::size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i)
        strides[static_cast<std::size_t>(i)] =
            strides[static_cast<std::size_t>(i + 1)] * static_cast<std::size_t>(n);
}

void build_kwl_update(const Graph& g, int k, const Coloring& prev, std::size_t idx,
                      std::string& out, std::vector<int>& entries,
                      std::vector<std::size_t>& strides, std::vector<ColorId>& multiset) {
    const int n = g.node_count();
    entries.resize(static_cast<std::size_t>(k));
    tuple_from_index(idx, n, k, entries);
    out.clear();
    out.push_back(kTagKwl);
    bytes::put_u32(out, static_cast<std::uint32_t>(k));
    bytes::put_u32(out, prev.colors[idx]);
    for (int i = 0; i < k; ++i) {
        const std::size_t stride = strides[static_cast<std::size_t>(i)];
        const std::size_t base = idx - static_cast<std::size_t>(entries[static_cast<std::size_t>(i)]) * stride;
        multiset.clear();
        for (int w = 0; w < n; ++w)
            multiset.push_back(prev.colors[base + static_cast<std::size_t>(w) * stride]);
        std::sort(multiset.begin(), multiset.end());
        bytes::put_u32(out, static_cast<std::uint32_t>(multiset.size()));
        for (ColorId c : multiset) bytes::put_u32(out, c);
    }
}

void build_kfwl_update(const Graph& g, int k, const Coloring& prev, std::size_t idx,
                       std::string& out, std::vector<int>& entries,
                       std::vector<std::size_t>& strides, std::vector<ColorId>& rows,
                       std::vector<int>& order) {
    const int n = g.node_count();
    entries.resize(static_cast<std::size_t>(k));
    tuple_from_index(idx, n, k, entries);

    // rows[w*k + i] = color of the tuple with position i replaced by w.
    rows.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const std::size_t stride = strides[static_cast<std::size_t>(i)];
        const std::size_t base = idx - static_cast<std::size_t>(entries[static_cast<std::size_t>(i)]) * stride;
        for (int w = 0; w < n; ++w) {
            rows[static_cast<std::size_t>(w) * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] =
                prev.colors[base + static_cast<std::size_t>(w) * stride];
        }
    }
    // Sort the k-vectors lexicographically: the outer collection over w is a
    // multiset, the inner k-vector stays ordered.
    order.resize(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) order[static_cast<std::size_t>(w)] = w;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const ColorId* ra = rows.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(k);
        const ColorId* rb = rows.data() + static_cast<std::size_t>(b) * static_cast<std::size_t>(k);
        return std::lexicographical_compare(ra, ra + k, rb, rb + k);
    });

    out.clear();
    out.push_back(kTagKfwl);
    bytes::put_u32(out, static_cast<std::uint32_t>(k));
    bytes::put_u32(out, prev.colors[idx]);
    bytes::put_u32(out, static_cast<std::uint32_t>(n));
    for (int w : order) {
        const ColorId* r = rows.data() + static_cast<std::size_t>(w) * static_cast<std::size_t>(k);
        for (int i = 0; i < k; ++i) bytes::put_u32(out, r[i]);
    }
}

Coloring intern_all(std::span<const std::string> sigs, ColorTable& ct) {
    Coloring c;
    c.colors.resize(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) c.colors[i] = ct.intern(sigs[i]);
    return c;
}

}  // namespace

void build_init_signatures(const AlgorithmDescriptor& alg, const Graph& g,
                           std::size_t begin, std::size_t end, std::span<std::string> out) {
    if (alg.variant == Variant::WL1) {
        for (std::size_t i = begin; i < end; ++i) build_wl1_init(g, static_cast<int>(i), out[i]);
        return;
    }
    std::vector<int> entries(static_cast<std::size_t>(alg.k));
    for (std::size_t i = begin; i < end; ++i) {
        tuple_from_index(i, g.node_count(), alg.k, entries);
        build_tuple_init(g, entries, alg.equality_aware, out[i]);
    }
}

void build_round_signatures(const AlgorithmDescriptor& alg, const Graph& g, const Coloring& prev,
                            std::size_t begin, std::size_t end, std::span<std::string> out) {
    std::vector<ColorId> scratch;
    std::vector<int> entries;
    std::vector<std::size_t> strides;
    std::vector<int> order;
    switch (alg.variant) {
        case Variant::WL1:
            for (std::size_t i = begin; i < end; ++i)
                build_wl1_update(g, prev, static_cast<int>(i), out[i], scratch);
            return;
        case Variant::KWL:
            fill_strides(g.node_count(), alg.k, strides);
            for (std::size_t i = begin; i < end; ++i)
                build_kwl_update(g, alg.k, prev, i, out[i], entries, strides, scratch);
            return;
        case Variant::KFWL:
            fill_strides(g.node_count(), alg.k, strides);
            for (std::size_t i = begin; i < end; ++i)
                build_kfwl_update(g, alg.k, prev, i, out[i], entries, strides, scratch, order);
            return;
    }
    throw std::invalid_argument("unknown algorithm variant");
}

Coloring init_colors(const AlgorithmDescriptor& alg, const Graph& g, ColorTable& ct) {
    validate_graph_support(alg, g);
    const std::size_t domain = alg.domain_size(g);
    std::vector<std::string> sigs(domain);
    build_init_signatures(alg, g, 0, domain, sigs);
    return intern_all(sigs, ct);
}

namespace {

Coloring run_one_round(const AlgorithmDescriptor& alg, const Graph& g, const Coloring& prev,
                       ColorTable& ct) {
    const std::size_t domain = alg.domain_size(g);
    if (prev.domain_size() != domain)
        throw std::invalid_argument("round update: coloring domain " +
                                    std::to_string(prev.domain_size()) + " does not match " +
                                    std::to_string(domain));
    std::vector<std::string> sigs(domain);
    build_round_signatures(alg, g, prev, 0, domain, sigs);
    return intern_all(sigs, ct);
}

}  // namespace

Coloring wl1_round(const Graph& g, const Coloring& prev, ColorTable& ct) {
    return run_one_round(AlgorithmDescriptor::wl1(), g, prev, ct);
}

Coloring kwl_round(const Graph& g, int k, const Coloring& prev, ColorTable& ct) {
    return run_one_round(AlgorithmDescriptor::kwl(k), g, prev, ct);
}

Coloring kfwl_round(const Graph& g, int k, const Coloring& prev, ColorTable& ct) {
    return run_one_round(AlgorithmDescriptor::kfwl(k), g, prev, ct);
}

}  // namespace wlkit
