#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wlkit/refinement.hpp"

namespace wlkit {

// Corpus-level property checks:
//   remark1   — compare(wl1) and compare(kwl k=2) verdicts agree;
//   remark2   — compare(kfwl k=2) and compare(kwl k=3) verdicts agree;
//   soundness — every DISTINGUISHED verdict (any variant run on the pair) is
//               confirmed non-isomorphic by the exact oracle.
struct CorpusChecks {
    bool remark1 = true;
    bool remark2 = true;
    bool soundness = true;
};

struct CorpusViolation {
    std::string property;  // "remark1" | "remark2" | "soundness"
    std::string origin;    // which pair, for reproduction
    Graph g1, g2;
    std::string details;
};

struct CorpusStats {
    std::size_t pairs = 0;
    std::size_t remark1_agreements = 0;
    std::size_t remark2_agreements = 0;
    std::size_t distinguished_verdicts = 0;
    std::size_t oracle_confirmations = 0;
    std::vector<CorpusViolation> violations;

    bool ok() const { return violations.empty(); }
    void merge(const CorpusStats& other);
};

/// Feed graph pairs; stats accumulate. Pairs must stay within the oracle's
/// node limit when soundness is enabled.
class CorpusRunner {
public:
    explicit CorpusRunner(CorpusChecks checks, RefinementOptions engine = {});
    void check_pair(const Graph& g1, const Graph& g2, std::string_view origin);
    const CorpusStats& stats() const { return stats_; }

private:
    CorpusChecks checks_;
    RefinementOptions engine_;
    CorpusStats stats_;
};

}  // namespace wlkit
