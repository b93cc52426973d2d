#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wlkit/algorithm.hpp"
#include "wlkit/coloring.hpp"
#include "wlkit/graph.hpp"

namespace wlkit {

struct RefinementOptions {
    /// Update-round cap. Unset means the provable domain-size bound, under
    /// which truncation cannot occur. 0 is rejected.
    std::optional<std::size_t> max_rounds;
    /// Worker threads for signature computation. Interning stays sequential
    /// in ascending object-index order, so results are bit-identical for any
    /// thread count.
    int threads = 1;
    /// Keep the full per-round coloring history (needed for traces).
    bool keep_history = true;
};

struct RefinementResult {
    AlgorithmDescriptor algorithm;
    std::size_t domain_size = 0;
    /// Update rounds executed. When stabilized, the final partition was first
    /// reached at round rounds-1 and round `rounds` confirmed it.
    std::size_t rounds = 0;
    /// False only when max_rounds truncated the run.
    bool stabilized = false;
    /// Colorings for rounds 0..rounds (present when keep_history).
    std::vector<Coloring> history;
    Coloring final_coloring;
    /// Multiset of final colors as ColorId -> multiplicity.
    Histogram certificate;
    /// Total distinct colors interned over the run (diagnostic).
    std::size_t colors_interned = 0;

    /// Round at which the stable partition was first attained.
    std::optional<std::size_t> stable_round() const {
        if (!stabilized) return std::nullopt;
        return rounds == 0 ? 0 : rounds - 1;
    }
};

enum class Verdict { Distinguished, EquivalentUnderTest };
std::string_view verdict_name(Verdict v);  // "DISTINGUISHED" / "EQUIVALENT_UNDER_TEST"

struct ComparisonResult {
    AlgorithmDescriptor algorithm;
    Verdict verdict = Verdict::EquivalentUnderTest;
    /// Least round with differing color histograms, when DISTINGUISHED.
    std::optional<std::size_t> first_distinguishing_round;
    /// Per-round (g1, g2) histograms for rounds 0..rounds_run. Comparable
    /// across the graphs because both refinements share one color table.
    std::vector<std::pair<Histogram, Histogram>> round_histograms;
    Histogram certificate1, certificate2;
    std::size_t rounds_run = 0;
    /// True when max_rounds stopped the run before both sides stabilized.
    bool truncated = false;
};

/// Drives init + rounds until two consecutive rounds induce the same
/// partition or max_rounds is hit. Monotone refinement (each round refines
/// the previous partition) and the rounds <= domain_size cap are enforced as
/// hard assertions on every run; violations throw std::logic_error.
RefinementResult run_refinement(const AlgorithmDescriptor& alg, const Graph& g,
                                const RefinementOptions& opts = {});

/// Runs both graphs in lockstep over one shared color table and compares the
/// color histograms after every round. Stops at the first mismatch
/// (DISTINGUISHED) or once both sides stabilized with identical histograms at
/// every round (EQUIVALENT_UNDER_TEST). Mismatched node counts or feature
/// shapes surface as a round-0 distinction, not an error.
ComparisonResult compare(const AlgorithmDescriptor& alg, const Graph& g1, const Graph& g2,
                         const RefinementOptions& opts = {});

/// Multiset of final colors of a completed run; multiplicities sum to the
/// domain size.
Histogram certificate(const RefinementResult& r);

}  // namespace wlkit
