#pragma once

#include <map>
#include <string>
#include <variant>

#include "nonsep/graph.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

enum class NeighborKind { X, Y, XY };

using NeighborClass = std::map<VertexId, NeighborKind>;

/// Classifies each w as adjacent to x only, y only, or both.
/// Throws DomainError if x, y are not adjacent or some w sees neither.
NeighborClass classify_neighbors(const Graph& g, VertexId x, VertexId y, const VertexSet& v_neighbors);

/// G' = G / xy with merged vertex v.
struct ContractOp {
  VertexId x, y, v;
};

/// G' = G - xy.
struct DeleteOp {
  VertexId x, y;
};

struct LiftContext {
  Graph g;
  Graph g_prime;
  std::variant<ContractOp, DeleteOp> operation;
  SubdivisionCertificate h_prime;

  /// V(H') for deletions and untouched contractions; (V(H') - v) + {x, y} otherwise.
  VertexSet lift_set() const;
};

enum class LiftBranch {
  Unchanged,
  // contraction
  Case1AllXY,
  Case1NoY,
  Case1NoX,
  Case1Mixed,
  Case2K4Wheel,
  Case2K4Prism,
  Case2K33,
  Case2PrismOnPartner,
  Case2PrismOnMate,
  Case2WheelRim,
  Case2WheelSpoke,
  Case2WheelCenter,
  Case3Adjacent,
  Case3Uniform,
  Case3Mixed,
  Case4NoY,
  Case4OneY,
  Case4Mixed,
  RunAll,
  RunLong,
  RunPrism,
  RunShort,
  AlternatingK33,
  AlternatingK4,
  // deletion
  Chord,
  K33SameClass,
  K33Internal,
  PrismPrincipal,
  PrismTriangle,
  PrismMatching,
  WheelRimLong,
  WheelRimShort,
  WheelDisjointPaths,
  WheelCenter,
  WheelSpoke,
};

std::string to_string(LiftBranch b);

/// Coarse grouping for coverage reports, e.g. "contract/case2", "delete/wheel".
std::string branch_group(LiftBranch b);

struct LiftResult {
  SubdivisionCertificate cert;
  LiftBranch branch;
};

/// Throws DomainError on violated preconditions and InvariantViolation if a
/// constructed subgraph fails verification.
LiftResult lift_through_contraction(const LiftContext& ctx);
LiftResult lift_through_deletion(const LiftContext& ctx);

/// Dispatches on the operation.
LiftResult lift(const LiftContext& ctx);

}  // namespace nonsep
