#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

enum class ExtractMode { FourConnected, MinDegree4 };

enum class ReductionKind { DeleteEdge, ContractEdge, BrickSurgery };

enum class TerminalCase { SquareOfCycle, LineOfCubic, BrickCase };

std::string to_string(ExtractMode m);
std::string to_string(ReductionKind k);
std::string to_string(TerminalCase t);

struct ReductionStep {
  ReductionKind kind = ReductionKind::DeleteEdge;
  std::string surgery;             ///< name of the brick surgery
  std::optional<Edge> edge;        ///< deleted or contracted edge
  std::optional<VertexId> merged;  ///< label of the contracted vertex
  std::optional<Graph> after;      ///< result of a brick surgery
  std::size_t before_vertices = 0, before_edges = 0;
  std::size_t after_vertices = 0, after_edges = 0;
  VertexId avoid_before, avoid_after;
  std::string lift;  ///< how the certificate was carried back
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  ///< outermost first
  TerminalCase terminal = TerminalCase::SquareOfCycle;
  std::string terminal_detail;
};

/// Every intermediate graph, starting with g. Throws DomainError if a step does not apply.
std::vector<Graph> replay(const Graph& g, const ReductionTrace& trace);

struct Extraction {
  SubdivisionCertificate cert;
  ReductionTrace trace;
};

struct SquareOrder {
  int length = 0;
  std::vector<VertexId> order;
};

std::optional<SquareOrder> is_square_of_cycle(const Graph& g);

struct CubicRoot {
  Graph y;
  std::map<VertexId, Edge> edge_of;  ///< vertex of G -> edge of Y
};

/// Partition of E(G) into triangles with every vertex on exactly two of them.
std::optional<CubicRoot> is_line_graph_of_cubic(const Graph& g);

/// First edge in lexicographic order whose contraction keeps G 4-connected.
/// Returns nothing only for squares of cycles and line graphs of cubic graphs;
/// throws InvariantViolation if neither applies. Throws DomainError unless G is 4-connected.
std::optional<Edge> find_contractible_edge(const Graph& g);

/// Rotates `order` so that x comes last, then takes x_0..x_4, x_6, ..., x_{l-2}
/// (l even, a 4-wheel) or x_0..x_3, x_5, ..., x_{l-2} (l odd, a K4).
SubdivisionCertificate square_of_cycle_certificate(const Graph& g, const SquareOrder& sq, VertexId x);

/// Image of a theta of Y that avoids the smaller end of the Y-edge of x.
SubdivisionCertificate line_graph_certificate(const Graph& g, const CubicRoot& root, VertexId x);

/// G simple and 4-connected.
Extraction extract_4connected(const Graph& g, VertexId x);

/// G simple, connected, minimum degree at least 4.
Extraction extract_min_degree4(const Graph& g, VertexId x);

Extraction extract(const Graph& g, VertexId x, ExtractMode mode);

struct K4Extraction {
  /// Nonseparating induced certificate avoiding x that admits a spanning K4 subdivision.
  SubdivisionCertificate certificate;
  SubdivisionCertificate k4;
  /// The extractor's original certificate; certificate is obtained from it by
  /// dropping the interiors of surplus subdivided paths.
  SubdivisionCertificate original;
  ReductionTrace trace;
};

/// Induced sub-certificate of cert admitting a spanning K4 subdivision, obtained
/// by dropping the interiors of surplus subdivided spokes, or of one prism
/// triangle path or K33 path. Returns cert if it already admits one.
SubdivisionCertificate shrink_for_spanning_k4(const Graph& g, const SubdivisionCertificate& cert);

K4Extraction extract_k4(const Graph& g, VertexId x, ExtractMode mode);

}  // namespace nonsep
