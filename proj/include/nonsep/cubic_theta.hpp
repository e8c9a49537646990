#pragma once

#include <string>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

enum class CubicReductionKind { BridgeSplit, K4minusExcision, TriangleContraction, VertexPairExcision };

std::string to_string(CubicReductionKind kind);

/// One surgery performed while searching for a theta in a cubic graph.
struct CubicReduction {
  CubicReductionKind kind;
  VertexSet removed;
  std::vector<Edge> added;
  std::size_t source_vertices = 0;
  std::size_t target_vertices = 0;
  VertexId target_x;  ///< vertex to avoid in the reduced graph
};

struct ThetaSearch {
  SubdivisionCertificate theta;
  std::vector<CubicReduction> reductions;  ///< outermost first
};

/// Nonseparating induced theta avoiding x in a connected cubic G that is not K4.
/// Throws DomainError naming the failed precondition.
SubdivisionCertificate find_theta(const Graph& g, VertexId x);

/// Same, also returning the reductions that were applied.
ThetaSearch find_theta_traced(const Graph& g, VertexId x);

/// |V(G)| = 6: G - x as a theta.
SubdivisionCertificate base_case(const Graph& g, VertexId x);

}  // namespace nonsep
