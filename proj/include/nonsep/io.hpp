#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nonsep/bricks.hpp"
#include "nonsep/extractor.hpp"
#include "nonsep/graph.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

using Json = nlohmann::json;

/// Text format: a line `n m`, then m lines `u v` with labels in 0..n-1.
/// Everything after `#` on a line is ignored. Loops, repeated edges and a
/// wrong edge count are DomainErrors.
Graph parse_graph_text(std::string_view text);

/// Throws DomainError unless the labels are exactly 0..n-1.
std::string format_graph_text(const Graph& g);

/// {"vertices":[...],"edges":[[u,v],...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// JSON if the first significant character is `{`, text otherwise.
Graph parse_graph(std::string_view content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
Graph read_graph_file(const std::string& path);

/// {"pattern":"wheel","l":4,"branch":{"0":label,...},"paths":[[...],...]}.
/// "l" is present for wheels only.
Json certificate_to_json(const SubdivisionCertificate& c);
/// Checks shape and counts against the pattern; consistency with a graph is left to verification.
SubdivisionCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
Json k4_report_to_json(const K4Report& r);

/// {"hvertices":[...],"hyperedges":[{"vertices":[...],"brick":"k5minus"},...]}
Json blueprint_to_json(const Blueprint& bp);
Blueprint blueprint_from_json(const Json& j);

/// Blueprint schema with "inner" and "map" (model vertex -> label) per brick, or
/// {"square_of_cycle":[order]}.
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json step_to_json(const ReductionStep& s);
ReductionStep step_from_json(const Json& j);

/// One JSON object per step, then a final {"terminal":...,"detail":...} line.
std::string trace_to_jsonl(const ReductionTrace& t);
ReductionTrace trace_from_jsonl(std::string_view text);

/// Graphviz rendering; `highlight` vertices are filled, x is drawn as a box.
std::string to_dot(const Graph& g, const VertexSet& highlight = {}, std::optional<VertexId> x = std::nullopt);

}  // namespace nonsep
