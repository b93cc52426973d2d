// wlkit — command-line front end for the WL / k-WL / k-FWL refinement tests.
//
// Exit codes are a scripting contract:
//   refine/trace/bench: 0 ok, 2 error
//   compare:            0 equivalent-under-test, 1 distinguished, 2 error
//   oracle:             0 isomorphic, 1 non-isomorphic, 2 error
//   corpus:             0 all properties hold, 1 violation, 2 error
// stdout is machine-parsable JSON under --format json, human text otherwise;
// stderr carries diagnostics only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wlkit/corpus.hpp"
#include "wlkit/formats.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/iso_oracle.hpp"
#include "wlkit/refinement.hpp"
#include "wlkit/variants.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace wlkit;

struct CliConfig {
    std::string algorithm;
    int k = -1;
    std::optional<std::size_t> max_rounds;
    int threads = 1;
    bool equality_aware = false;
    std::string format = "text";
    std::vector<std::string> inputs;
    std::string output;
};

AlgorithmDescriptor make_descriptor(const CliConfig& cfg) {
    AlgorithmDescriptor alg;
    if (cfg.algorithm == "wl1") {
        if (cfg.k >= 0) throw CLI::ValidationError("--alg wl1 takes no -k");
        alg = AlgorithmDescriptor::wl1();
    } else if (cfg.algorithm == "kwl") {
        if (cfg.k < 0) throw CLI::ValidationError("--alg kwl requires -k");
        alg = AlgorithmDescriptor::kwl(cfg.k, cfg.equality_aware);
    } else if (cfg.algorithm == "kfwl") {
        if (cfg.k < 0) throw CLI::ValidationError("--alg kfwl requires -k");
        alg = AlgorithmDescriptor::kfwl(cfg.k, cfg.equality_aware);
    } else {
        throw CLI::ValidationError("--alg must be one of wl1|kwl|kfwl");
    }
    alg.validate();
    if (alg.variant == Variant::KWL && alg.k == 1)
        std::cerr << "warning: kwl with k=1 stabilizes after one round with the initial partition; "
                     "it is weaker than wl1\n";
    return alg;
}

RefinementOptions engine_options(const CliConfig& cfg) {
    RefinementOptions opts;
    opts.max_rounds = cfg.max_rounds;
    opts.threads = cfg.threads;
    return opts;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

ordered_json histogram_json(const Histogram& h) {
    ordered_json out = ordered_json::object();
    for (const auto& [id, count] : h) out[std::to_string(id)] = count;
    return out;
}

ordered_json algorithm_json(const AlgorithmDescriptor& alg) {
    ordered_json a;
    a["variant"] = alg.variant_name();
    if (alg.variant == Variant::WL1)
        a["k"] = nullptr;
    else
        a["k"] = alg.k;
    a["equality_aware"] = alg.equality_aware;
    return a;
}

void add_common_flags(CLI::App* cmd, CliConfig& cfg, bool with_alg = true) {
    if (with_alg) {
        cmd->add_option("--alg", cfg.algorithm, "Algorithm: wl1|kwl|kfwl")->required();
        cmd->add_option("-k,--k", cfg.k, "Tuple dimension (kwl/kfwl)");
        cmd->add_flag("--equality-aware", cfg.equality_aware,
                      "Include the within-tuple equality pattern in initial colors");
    }
    cmd->add_option("--max-rounds", cfg.max_rounds, "Round cap (default: domain size)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", cfg.threads, "Worker threads for signature computation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

int cmd_refine(const CliConfig& cfg, const std::string& trace_path, const std::string& trace_format) {
    const auto alg = make_descriptor(cfg);
    const Graph g = load_graph_file(cfg.inputs[0]);
    const auto result = run_refinement(alg, g, engine_options(cfg));

    if (!trace_path.empty()) {
        const auto fmt = trace_format == "dot" ? TraceFormat::Dot : TraceFormat::Json;
        write_output(trace_path, write_trace(g, result, fmt));
    }

    const std::size_t classes = result.certificate.size();
    if (cfg.format == "json") {
        ordered_json doc;
        doc["algorithm"] = algorithm_json(alg);
        doc["domain_size"] = result.domain_size;
        doc["rounds"] = result.rounds;
        doc["stabilized"] = result.stabilized;
        if (auto s = result.stable_round())
            doc["stable_round"] = *s;
        else
            doc["stable_round"] = nullptr;
        doc["classes"] = classes;
        doc["certificate"] = histogram_json(result.certificate);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "algorithm: " << alg.name() << "\n";
        std::cout << "domain size: " << result.domain_size << "\n";
        std::cout << "rounds: " << result.rounds;
        if (result.stabilized)
            std::cout << " (stable partition reached at round " << *result.stable_round() << ")\n";
        else
            std::cout << " (round cap hit before stabilization)\n";
        std::cout << "classes: " << classes << "\n";
    }
    return 0;
}

int cmd_trace(const CliConfig& cfg, const std::string& trace_format) {
    const auto alg = make_descriptor(cfg);
    const Graph g = load_graph_file(cfg.inputs[0]);
    const auto result = run_refinement(alg, g, engine_options(cfg));
    const auto fmt = trace_format == "dot" ? TraceFormat::Dot : TraceFormat::Json;
    write_output(cfg.output, write_trace(g, result, fmt));
    return 0;
}

int cmd_compare(const CliConfig& cfg, const std::string& report_path) {
    const auto alg = make_descriptor(cfg);
    const Graph g1 = load_graph_file(cfg.inputs[0]);
    const Graph g2 = load_graph_file(cfg.inputs[1]);
    const auto result = compare(alg, g1, g2, engine_options(cfg));

    if (!report_path.empty()) write_output(report_path, write_comparison_report(result));

    if (cfg.format == "json") {
        std::cout << write_comparison_report(result);
    } else {
        std::cout << "algorithm: " << alg.name() << "\n";
        std::cout << "verdict: " << verdict_name(result.verdict) << "\n";
        if (result.first_distinguishing_round)
            std::cout << "first distinguishing round: " << *result.first_distinguishing_round << "\n";
        std::cout << "rounds run: " << result.rounds_run << "\n";
    }
    return result.verdict == Verdict::Distinguished ? 1 : 0;
}

int cmd_oracle(const CliConfig& cfg) {
    const Graph g1 = load_graph_file(cfg.inputs[0]);
    const Graph g2 = load_graph_file(cfg.inputs[1]);
    const auto witness = is_isomorphic(g1, g2);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["isomorphic"] = witness.isomorphic;
        if (witness.permutation)
            doc["permutation"] = witness.permutation->mapping();
        else
            doc["permutation"] = nullptr;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "isomorphic: " << (witness.isomorphic ? "yes" : "no") << "\n";
        if (witness.permutation) {
            std::cout << "witness:";
            for (int image : witness.permutation->mapping()) std::cout << " " << image;
            std::cout << "\n";
        }
    }
    return witness.isomorphic ? 0 : 1;
}

struct CorpusConfig {
    int enumerate_n = 4;
    int remark2_enum_cap = 4;
    std::vector<int> random_ns;
    int random_pairs = 0;
    double gnp_p = 0.5;
    std::optional<std::uint64_t> seed;
    bool skip_remark1 = false, skip_remark2 = false, skip_soundness = false;
    std::string reproducer_path;
};

int cmd_corpus(const CliConfig& cfg, const CorpusConfig& cc) {
    if (cc.random_pairs > 0 && !cc.seed)
        throw CLI::ValidationError("--seed is required when --random-pairs is set");
    for (int n : cc.random_ns) {
        if (!cc.skip_soundness && n > kIsoNodeLimit)
            throw CLI::ValidationError("--random-n exceeds the oracle limit of " +
                                       std::to_string(kIsoNodeLimit) + "; use --skip-soundness");
    }

    CorpusChecks checks;
    checks.remark1 = !cc.skip_remark1;
    checks.remark2 = !cc.skip_remark2;
    checks.soundness = !cc.skip_soundness;

    // Remark-2 runs kwl k=3; cap its enumeration depth separately so a deep
    // remark-1 sweep stays affordable.
    CorpusRunner full(checks, engine_options(cfg));
    CorpusChecks no_r2 = checks;
    no_r2.remark2 = false;
    CorpusRunner shallow(no_r2, engine_options(cfg));

    for (int n = 1; n <= cc.enumerate_n; ++n) {
        const auto graphs = enumerate_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                const std::string origin =
                    "enum n=" + std::to_string(n) + " pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                if (checks.remark2 && n <= cc.remark2_enum_cap)
                    full.check_pair(graphs[i], graphs[j], origin);
                else
                    shallow.check_pair(graphs[i], graphs[j], origin);
            }
        }
    }
    if (cc.random_pairs > 0) {
        for (int n : cc.random_ns) {
            for (int t = 0; t < cc.random_pairs; ++t) {
                const std::uint64_t base =
                    *cc.seed + 1000003ull * static_cast<std::uint64_t>(n) + 2ull * static_cast<std::uint64_t>(t);
                const Graph g1 = random_gnp(n, cc.gnp_p, base);
                const Graph g2 = random_gnp(n, cc.gnp_p, base + 1);
                const std::string origin = "random n=" + std::to_string(n) + " trial " + std::to_string(t);
                full.check_pair(g1, g2, origin);
            }
        }
    }

    CorpusStats stats = full.stats();
    stats.merge(shallow.stats());

    if (cfg.format == "json") {
        ordered_json doc;
        doc["pairs"] = stats.pairs;
        doc["remark1_agreements"] = stats.remark1_agreements;
        doc["remark2_agreements"] = stats.remark2_agreements;
        doc["distinguished_verdicts"] = stats.distinguished_verdicts;
        doc["oracle_confirmations"] = stats.oracle_confirmations;
        doc["violations"] = stats.violations.size();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "pairs checked: " << stats.pairs << "\n";
        std::cout << "remark-1 agreements (wl1 vs kwl k=2): " << stats.remark1_agreements << "\n";
        std::cout << "remark-2 agreements (kfwl k=2 vs kwl k=3): " << stats.remark2_agreements << "\n";
        std::cout << "distinguished verdicts: " << stats.distinguished_verdicts
                  << ", oracle-confirmed: " << stats.oracle_confirmations << "\n";
        std::cout << "violations: " << stats.violations.size() << "\n";
    }

    if (!stats.ok()) {
        // Minimal reproducer: the offending pair plus what disagreed.
        const auto& v = stats.violations.front();
        ordered_json repro;
        repro["property"] = v.property;
        repro["origin"] = v.origin;
        repro["details"] = v.details;
        repro["g1"] = ordered_json::parse(serialize_graph(v.g1, GraphFormat::Json));
        repro["g2"] = ordered_json::parse(serialize_graph(v.g2, GraphFormat::Json));
        const std::string text = repro.dump(2) + "\n";
        if (!cc.reproducer_path.empty())
            write_output(cc.reproducer_path, text);
        else
            std::cerr << "reproducer:\n" << text;
        return 1;
    }
    return 0;
}

struct BenchConfig {
    std::string family = "random_regular";
    int degree = 3;
    double prob = 0.5;
    std::vector<int> sizes;
    std::optional<std::uint64_t> seed;
};

int cmd_bench(const CliConfig& cfg, const BenchConfig& bc) {
    const auto alg = make_descriptor(cfg);
    const bool random_family = bc.family == "random_gnp" || bc.family == "random_regular";
    if (random_family && !bc.seed)
        throw CLI::ValidationError("--seed is required for random families");

    ordered_json rows = ordered_json::array();
    for (int n : bc.sizes) {
        Graph g;
        if (bc.family == "cycle")
            g = make_cycle(n);
        else if (bc.family == "complete")
            g = make_complete(n);
        else if (bc.family == "random_gnp")
            g = random_gnp(n, bc.prob, *bc.seed);
        else if (bc.family == "random_regular")
            g = random_regular(n, bc.degree, *bc.seed);
        else
            throw CLI::ValidationError("--family must be cycle|complete|random_gnp|random_regular");

        auto opts = engine_options(cfg);
        opts.keep_history = false;
        const auto t0 = std::chrono::steady_clock::now();
        const auto result = run_refinement(alg, g, opts);
        const auto t1 = std::chrono::steady_clock::now();

        ordered_json row;
        row["alg"] = alg.variant_name();
        if (alg.variant != Variant::WL1) row["k"] = alg.k;
        row["family"] = bc.family;
        row["n"] = n;
        if (bc.family == "random_regular") row["degree"] = bc.degree;
        if (bc.family == "random_gnp") row["p"] = bc.prob;
        if (random_family) row["seed"] = *bc.seed;
        row["threads"] = cfg.threads;
        row["domain_size"] = result.domain_size;
        row["rounds"] = result.rounds;
        row["stabilized"] = result.stabilized;
        row["final_classes"] = result.certificate.size();
        row["colors_interned"] = result.colors_interned;
        row["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["schema"] = "wlkit-bench/1";
    doc["rows"] = std::move(rows);
    write_output(cfg.output, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wlkit — Weisfeiler-Lehman color refinement toolkit (1-WL, k-WL, k-FWL)"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string trace_path, trace_format = "json", report_path;
    CorpusConfig corpus_cfg;
    BenchConfig bench_cfg;

    auto* refine = app.add_subcommand("refine", "Run one refinement; print rounds and class count");
    add_common_flags(refine, cfg);
    refine->add_option("--trace", trace_path, "Write the per-round trace to this file ('-' = stdout)");
    refine->add_option("--trace-format", trace_format, "Trace format: json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    refine->add_option("input", cfg.inputs, "Graph file (json or edgelist)")
        ->required()
        ->expected(1)
        ->check(CLI::ExistingFile);

    auto* cmp = app.add_subcommand("compare", "Compare two graphs; exit 0 equivalent, 1 distinguished");
    add_common_flags(cmp, cfg);
    cmp->add_option("--report", report_path, "Write the JSON comparison report to this file");
    cmp->add_option("inputs", cfg.inputs, "Two graph files")
        ->required()
        ->expected(2)
        ->check(CLI::ExistingFile);

    auto* oracle = app.add_subcommand("oracle", "Exact isomorphism check; exit 0 isomorphic, 1 not");
    oracle->add_option("--format", cfg.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    oracle->add_option("inputs", cfg.inputs, "Two graph files")
        ->required()
        ->expected(2)
        ->check(CLI::ExistingFile);

    auto* trace = app.add_subcommand("trace", "Emit a refinement trace (json or dot)");
    add_common_flags(trace, cfg);
    trace->add_option("--trace-format", trace_format, "Trace format: json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    trace->add_option("-o,--output", cfg.output, "Output file ('-' = stdout)");
    trace->add_option("input", cfg.inputs, "Graph file")->required()->expected(1)->check(CLI::ExistingFile);

    auto* corpus = app.add_subcommand("corpus", "Check remark-1/remark-2 agreement and oracle soundness");
    add_common_flags(corpus, cfg, /*with_alg=*/false);
    corpus->add_option("--enumerate-n", corpus_cfg.enumerate_n, "Enumerate all graphs up to this n")
        ->check(CLI::Range(0, 5));
    corpus->add_option("--remark2-enum-cap", corpus_cfg.remark2_enum_cap,
                       "Largest enumerated n for the remark-2 check")
        ->check(CLI::Range(0, 5));
    corpus->add_option("--random-pairs", corpus_cfg.random_pairs, "Random G(n,p) pairs per size");
    corpus->add_option("--random-n", corpus_cfg.random_ns, "Sizes for random pairs (repeatable)");
    corpus->add_option("--gnp-p", corpus_cfg.gnp_p, "Edge probability for random pairs");
    corpus->add_option("--seed", corpus_cfg.seed, "Seed (required with --random-pairs)");
    corpus->add_flag("--skip-remark1", corpus_cfg.skip_remark1, "Skip the wl1 vs kwl k=2 check");
    corpus->add_flag("--skip-remark2", corpus_cfg.skip_remark2, "Skip the kfwl k=2 vs kwl k=3 check");
    corpus->add_flag("--skip-soundness", corpus_cfg.skip_soundness, "Skip the oracle soundness check");
    corpus->add_option("--reproducer", corpus_cfg.reproducer_path, "Write the first violation here");

    auto* bench = app.add_subcommand("bench", "Time refinements over a graph family; JSON report");
    add_common_flags(bench, cfg);
    bench->add_option("--family", bench_cfg.family, "cycle|complete|random_gnp|random_regular");
    bench->add_option("--degree", bench_cfg.degree, "Degree for random_regular");
    bench->add_option("--prob", bench_cfg.prob, "Edge probability for random_gnp");
    bench->add_option("--sizes", bench_cfg.sizes, "Node counts to run")->required()->delimiter(',');
    bench->add_option("--seed", bench_cfg.seed, "Seed for random families");
    bench->add_option("-o,--output", cfg.output, "Output file ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (refine->parsed()) return cmd_refine(cfg, trace_path, trace_format);
        if (cmp->parsed()) return cmd_compare(cfg, report_path);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (trace->parsed()) return cmd_trace(cfg, trace_format);
        if (corpus->parsed()) return cmd_corpus(cfg, corpus_cfg);
        if (bench->parsed()) return cmd_bench(cfg, bench_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
