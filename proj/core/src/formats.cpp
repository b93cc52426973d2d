#include "wlkit/formats.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wlkit {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + ": non-finite values cannot be serialized");
}

Graph parse_graph_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("json graph: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("json graph: top level must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "n" && key != "edges" && key != "node_features" && key != "edge_features")
            throw std::invalid_argument("json graph: unknown key \"" + key + "\"");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("json graph: missing integer field \"n\"");
    const int n = doc["n"].get<int>();

    std::vector<EdgeKey> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw std::invalid_argument("json graph: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw std::invalid_argument("json graph: each edge must be a pair of integers");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }

    std::optional<std::vector<FeatureVector>> node_features;
    if (doc.contains("node_features") && !doc["node_features"].is_null()) {
        if (!doc["node_features"].is_array())
            throw std::invalid_argument("json graph: \"node_features\" must be an array");
        node_features.emplace();
        for (const auto& row : doc["node_features"]) {
            if (!row.is_array()) throw std::invalid_argument("json graph: node feature must be an array");
            FeatureVector f;
            for (const auto& x : row) {
                if (!x.is_number()) throw std::invalid_argument("json graph: feature components must be numbers");
                f.push_back(x.get<double>());
            }
            node_features->push_back(std::move(f));
        }
    }

    std::optional<EdgeFeatureMap> edge_features;
    if (doc.contains("edge_features") && !doc["edge_features"].is_null()) {
        if (!doc["edge_features"].is_array())
            throw std::invalid_argument("json graph: \"edge_features\" must be an array");
        edge_features.emplace();
        for (const auto& entry : doc["edge_features"]) {
            if (!entry.is_object() || !entry.contains("edge") || !entry.contains("value"))
                throw std::invalid_argument(
                    "json graph: edge feature entries must be {\"edge\": [u,v], \"value\": [...]}");
            const auto& e = entry["edge"];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw std::invalid_argument("json graph: edge-feature edge must be a pair of integers");
            FeatureVector f;
            for (const auto& x : entry["value"]) {
                if (!x.is_number()) throw std::invalid_argument("json graph: feature components must be numbers");
                f.push_back(x.get<double>());
            }
            auto key = make_edge_key(e[0].get<int>(), e[1].get<int>());
            if (!edge_features->emplace(key, std::move(f)).second)
                throw std::invalid_argument("json graph: duplicate edge-feature key");
        }
    }

    return Graph::build(n, std::move(edges), std::move(node_features), std::move(edge_features));
}

Graph parse_graph_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    std::vector<EdgeKey> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        if (!have_n) {
            long long value;
            if (!(fields >> value)) {
                std::string token;
                if (fields.clear(), fields.str(line), fields >> token)
                    throw std::invalid_argument("edgelist line " + std::to_string(lineno) +
                                                ": expected node count, got \"" + token + "\"");
                continue;  // blank or comment-only line before the header
            }
            std::string extra;
            if (fields >> extra)
                throw std::invalid_argument("edgelist line " + std::to_string(lineno) +
                                            ": trailing token \"" + extra + "\" after node count");
            n = static_cast<int>(value);
            have_n = true;
            continue;
        }
        long long u, v;
        if (!(fields >> u)) continue;  // blank line
        if (!(fields >> v))
            throw std::invalid_argument("edgelist line " + std::to_string(lineno) +
                                        ": expected \"u v\", got \"" + line + "\"");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("edgelist line " + std::to_string(lineno) +
                                        ": trailing token \"" + extra + "\"");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!have_n) throw std::invalid_argument("edgelist: missing node-count header line");
    return Graph::build(n, std::move(edges));
}

ordered_json histogram_json(const Histogram& h) {
    ordered_json out = ordered_json::object();
    for (const auto& [id, count] : h) out[std::to_string(id)] = count;
    return out;
}

ordered_json algorithm_json(const AlgorithmDescriptor& alg) {
    ordered_json out;
    out["variant"] = alg.variant_name();
    if (alg.variant == Variant::WL1) {
        out["k"] = nullptr;
    } else {
        out["k"] = alg.k;
    }
    out["equality_aware"] = alg.equality_aware;
    return out;
}

std::string trace_json(const Graph& g, const RefinementResult& r) {
    ordered_json doc;
    doc["schema"] = kTraceSchema;
    doc["algorithm"] = algorithm_json(r.algorithm);
    doc["n"] = g.node_count();
    doc["domain_size"] = r.domain_size;
    doc["rounds"] = r.rounds;
    doc["stabilized"] = r.stabilized;
    if (auto s = r.stable_round())
        doc["stable_round"] = *s;
    else
        doc["stable_round"] = nullptr;

    const bool matrix_view = r.algorithm.variant != Variant::WL1 && r.algorithm.k == 2;
    const int n = g.node_count();
    ordered_json rounds = ordered_json::array();
    for (std::size_t round = 0; round < r.history.size(); ++round) {
        const Coloring& c = r.history[round];
        ordered_json entry;
        entry["round"] = round;
        entry["classes"] = c.colors;
        entry["histogram"] = histogram_json(histogram(c));
        if (matrix_view) {
            ordered_json matrix = ordered_json::array();
            for (int a = 0; a < n; ++a) {
                ordered_json row = ordered_json::array();
                for (int b = 0; b < n; ++b)
                    row.push_back(c.colors[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                                           static_cast<std::size_t>(b)]);
                matrix.push_back(std::move(row));
            }
            entry["matrix"] = std::move(matrix);
        }
        rounds.push_back(std::move(entry));
    }
    doc["rounds_detail"] = std::move(rounds);
    return doc.dump(2) + "\n";
}

std::string trace_dot(const Graph& g, const RefinementResult& r) {
    const auto& alg = r.algorithm;
    std::ostringstream out;
    if (alg.variant == Variant::WL1) {
        for (std::size_t round = 0; round < r.history.size(); ++round) {
            const Coloring& c = r.history[round];
            out << "graph round_" << round << " {\n";
            out << "  label=\"" << alg.name() << " round " << round << "\";\n";
            out << "  node [style=filled];\n";
            for (int v = 0; v < g.node_count(); ++v)
                out << "  " << v << " [fillcolor=\"" << display_color(c.colors[static_cast<std::size_t>(v)])
                    << "\"];\n";
            for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
        }
        return out.str();
    }
    if (alg.k != 2)
        throw std::invalid_argument("dot traces exist only for wl1 and k=2; use the json format");

    // One grid per round: cell (a, b) shows the class of tuple (a, b).
    const int n = g.node_count();
    for (std::size_t round = 0; round < r.history.size(); ++round) {
        const Coloring& c = r.history[round];
        out << "digraph round_" << round << " {\n";
        out << "  label=\"" << alg.name() << " round " << round << "\";\n";
        out << "  grid [shape=plaintext, label=<\n";
        out << "    <TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">\n";
        for (int a = 0; a < n; ++a) {
            out << "      <TR>";
            for (int b = 0; b < n; ++b) {
                const ColorId id = c.colors[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                                            static_cast<std::size_t>(b)];
                out << "<TD BGCOLOR=\"" << display_color(id) << "\">" << id << "</TD>";
            }
            out << "</TR>\n";
        }
        out << "    </TABLE>>];\n";
        out << "}\n";
    }
    return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Json ? parse_graph_json(text) : parse_graph_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        if (g.has_node_features() || g.has_edge_features())
            throw std::invalid_argument("edgelist format cannot carry features; use json");
        std::ostringstream out;
        out << g.node_count() << "\n";
        for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
        return out.str();
    }
    ordered_json doc;
    doc["n"] = g.node_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    doc["edges"] = std::move(edges);
    if (g.has_node_features()) {
        ordered_json rows = ordered_json::array();
        for (int v = 0; v < g.node_count(); ++v) {
            ordered_json row = ordered_json::array();
            for (double x : g.node_feature(v)) {
                require_finite(x, "node feature");
                row.push_back(x);
            }
            rows.push_back(std::move(row));
        }
        doc["node_features"] = std::move(rows);
    }
    if (g.has_edge_features()) {
        ordered_json rows = ordered_json::array();
        for (const auto& [key, value] : g.edge_features()) {
            ordered_json entry;
            entry["edge"] = ordered_json::array({key.first, key.second});
            ordered_json vals = ordered_json::array();
            for (double x : value) {
                require_finite(x, "edge feature");
                vals.push_back(x);
            }
            entry["value"] = std::move(vals);
            rows.push_back(std::move(entry));
        }
        doc["edge_features"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    const GraphFormat format =
        (first != std::string::npos && text[first] == '{') ? GraphFormat::Json : GraphFormat::EdgeList;
    return parse_graph(text, format);
}

std::string write_trace(const Graph& g, const RefinementResult& r, TraceFormat format) {
    if (r.history.empty())
        throw std::invalid_argument("write_trace: result has no history (run with keep_history)");
    return format == TraceFormat::Json ? trace_json(g, r) : trace_dot(g, r);
}

std::string write_comparison_report(const ComparisonResult& c) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["algorithm"] = algorithm_json(c.algorithm);
    doc["verdict"] = std::string(verdict_name(c.verdict));
    if (c.first_distinguishing_round)
        doc["first_distinguishing_round"] = *c.first_distinguishing_round;
    else
        doc["first_distinguishing_round"] = nullptr;
    doc["rounds_run"] = c.rounds_run;
    doc["truncated"] = c.truncated;
    ordered_json rounds = ordered_json::array();
    for (std::size_t round = 0; round < c.round_histograms.size(); ++round) {
        ordered_json entry;
        entry["round"] = round;
        entry["histogram_g1"] = histogram_json(c.round_histograms[round].first);
        entry["histogram_g2"] = histogram_json(c.round_histograms[round].second);
        rounds.push_back(std::move(entry));
    }
    doc["rounds"] = std::move(rounds);
    doc["certificate_g1"] = histogram_json(c.certificate1);
    doc["certificate_g2"] = histogram_json(c.certificate2);
    return doc.dump(2) + "\n";
}

std::string display_color(ColorId id) {
    static constexpr std::array<const char*, 6> named = {"grey", "yellow", "orange",
                                                         "brown", "blue",   "purple"};
    if (id < named.size()) return named[id];
    // Golden-angle hue walk; fixed saturation/value keep cells readable.
    const double h = static_cast<double>((id * 137u) % 360u) / 60.0;
    const double s = 0.55, v = 0.85;
    const int i = static_cast<int>(h);
    const double f = h - i;
    const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
    double rgb[3];
    switch (i % 6) {
        case 0: rgb[0] = v; rgb[1] = t; rgb[2] = p; break;
        case 1: rgb[0] = q; rgb[1] = v; rgb[2] = p; break;
        case 2: rgb[0] = p; rgb[1] = v; rgb[2] = t; break;
        case 3: rgb[0] = p; rgb[1] = q; rgb[2] = v; break;
        case 4: rgb[0] = t; rgb[1] = p; rgb[2] = v; break;
        default: rgb[0] = v; rgb[1] = p; rgb[2] = q; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(rgb[0] * 255 + 0.5),
                  static_cast<int>(rgb[1] * 255 + 0.5), static_cast<int>(rgb[2] * 255 + 0.5));
    return buf;
}

}  // namespace wlkit
