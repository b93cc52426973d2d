#pragma once

#include <string>
#include <string_view>

#include "wlkit/graph.hpp"
#include "wlkit/refinement.hpp"

namespace wlkit {

inline constexpr std::string_view kTraceSchema = "wlkit-trace/1";
inline constexpr std::string_view kReportSchema = "wlkit-report/1";

enum class GraphFormat { Json, EdgeList };
enum class TraceFormat { Json, Dot };

/// JSON graph document:
///   {"n": 6, "edges": [[0,1], ...],
///    "node_features": [[...], ...],                      (optional)
///    "edge_features": [{"edge": [u,v], "value": [...]}]} (optional)
/// Edgelist: first data line "n", then one "u v" line per edge; '#' starts a
/// comment. Parse -> serialize -> parse is the identity. Semantic validation
/// is delegated to Graph::build.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Reads a graph file, sniffing the format: a leading '{' means JSON,
/// anything else is treated as an edgelist.
Graph load_graph_file(const std::string& path);

/// Trace export. JSON carries the algorithm descriptor, per-round class
/// assignments and histograms, and for k=2 an n-by-n matrix view (cell [a][b]
/// is the class of tuple (a,b)). DOT renders per-round colored drawings for
/// 1-WL and per-round grids for k=2; k >= 3 has no DOT rendering and throws.
/// Requires a result with history.
std::string write_trace(const Graph& g, const RefinementResult& r, TraceFormat format);

std::string write_comparison_report(const ComparisonResult& c);

/// Deterministic class-id display color: the first six ids map to named
/// colors (grey, yellow, orange, brown, blue, purple), later ids to generated
/// hues.
std::string display_color(ColorId id);

}  // namespace wlkit
