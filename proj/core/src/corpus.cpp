#include "wlkit/corpus.hpp"

#include <optional>

#include "wlkit/iso_oracle.hpp"

namespace wlkit {

void CorpusStats::merge(const CorpusStats& other) {
    pairs += other.pairs;
    remark1_agreements += other.remark1_agreements;
    remark2_agreements += other.remark2_agreements;
    distinguished_verdicts += other.distinguished_verdicts;
    oracle_confirmations += other.oracle_confirmations;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

CorpusRunner::CorpusRunner(CorpusChecks checks, RefinementOptions engine)
    : checks_(checks), engine_(std::move(engine)) {
    engine_.keep_history = false;
}

void CorpusRunner::check_pair(const Graph& g1, const Graph& g2, std::string_view origin) {
    ++stats_.pairs;

    std::optional<bool> oracle_iso;
    auto oracle = [&] {
        if (!oracle_iso) oracle_iso = is_isomorphic(g1, g2).isomorphic;
        return *oracle_iso;
    };

    std::vector<std::pair<AlgorithmDescriptor, Verdict>> verdicts;
    auto run = [&](AlgorithmDescriptor alg) {
        const Verdict v = compare(alg, g1, g2, engine_).verdict;
        verdicts.emplace_back(alg, v);
        return v;
    };

    if (checks_.remark1) {
        const Verdict v1 = run(AlgorithmDescriptor::wl1());
        const Verdict v2 = run(AlgorithmDescriptor::kwl(2));
        if (v1 == v2) {
            ++stats_.remark1_agreements;
        } else {
            stats_.violations.push_back({"remark1", std::string(origin), g1, g2,
                                         "wl1=" + std::string(verdict_name(v1)) +
                                             " kwl2=" + std::string(verdict_name(v2))});
        }
    }
    if (checks_.remark2) {
        const Verdict vf = run(AlgorithmDescriptor::kfwl(2));
        const Verdict v3 = run(AlgorithmDescriptor::kwl(3));
        if (vf == v3) {
            ++stats_.remark2_agreements;
        } else {
            stats_.violations.push_back({"remark2", std::string(origin), g1, g2,
                                         "kfwl2=" + std::string(verdict_name(vf)) +
                                             " kwl3=" + std::string(verdict_name(v3))});
        }
    }
    if (checks_.soundness) {
        if (verdicts.empty()) run(AlgorithmDescriptor::wl1());
        for (const auto& [alg, v] : verdicts) {
            if (v != Verdict::Distinguished) continue;
            ++stats_.distinguished_verdicts;
            if (oracle()) {
                stats_.violations.push_back({"soundness", std::string(origin), g1, g2,
                                             alg.name() + " distinguished an isomorphic pair"});
            } else {
                ++stats_.oracle_confirmations;
            }
        }
    }
}

}  // namespace wlkit
