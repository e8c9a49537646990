#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

enum class BrickType { K5, K222, K5minus, K222minus, K5nabla, K222nabla, K5bowtie, K222bowtie, K3 };

inline constexpr BrickType kAllBrickTypes[] = {BrickType::K5,        BrickType::K222,      BrickType::K5minus,
                                               BrickType::K222minus, BrickType::K5nabla,   BrickType::K222nabla,
                                               BrickType::K5bowtie,  BrickType::K222bowtie, BrickType::K3};

std::string to_string(BrickType t);
std::optional<BrickType> brick_type_from_string(std::string_view s);

/// 1 for K5/K222, 2 for the minus and bowtie types, 3 for the nabla types and K3.
std::size_t attachment_count(BrickType t);
inline bool is_triangular(BrickType t) { return t == BrickType::K3; }
inline bool is_bowtie(BrickType t) { return t == BrickType::K5bowtie || t == BrickType::K222bowtie; }

struct Brick {
  BrickType type;
  std::vector<VertexId> attachments;
  VertexSet inner;
  std::vector<Edge> edges;

  VertexSet vertex_set() const;
  Graph as_graph() const;
  friend bool operator==(const Brick&, const Brick&) = default;
};

/// Canonical model on labels 0..n-1.
///   K5, K222: attachment 0.  K5minus: K5 - 01.  K222minus: octahedron - 01.
///   K5nabla, K222nabla: the triangle 012 removed, attachments 0, 1, 2.
///   K5bowtie: K4 on 0..3, attachments 4 ~ {0,1} and 5 ~ {2,3}.
///   K222bowtie: wheel with center 0 and rim 1234, attachments 5 ~ {1,2} and 6 ~ {3,4}.
Brick make_brick(BrickType t);

/// True if the brick is isomorphic to its model by a map sending attachments onto attachments.
bool matches_model(const Brick& b);

/// Such an isomorphism, from model labels to brick labels.
std::optional<std::map<VertexId, VertexId>> model_map(const Brick& b);

/// Simple, connected, nonempty, minimum degree at least 4.
bool in_class_c(const Graph& g);

struct EdgeStatus {
  bool essential = false;
  bool critical = false;
};

/// An endvertex has degree 4, or e is a bridge. Throws DomainError if G is not in the class or e is missing.
bool is_essential(const Graph& g, const Edge& e);
/// The endvertices have a common neighbour of degree 4, or N({u,v}) is three common neighbours.
bool is_critical(const Graph& g, const Edge& e);
EdgeStatus edge_status(const Graph& g, const Edge& e);
bool is_minimal_critical(const Graph& g);

/// Ordering v_0..v_{l-1} with v_i ~ v_{i+-1}, v_{i+-2} and no other edges, if G is C_l^2 with l >= 5.
std::optional<std::vector<VertexId>> square_of_cycle_order(const Graph& g);

struct BrickDecomposition {
  std::vector<Brick> bricks;

  /// Union of attachment vertices.
  VertexSet hypergraph_vertices() const;
  /// Hyperedge i is the attachment list of brick i.
  std::vector<std::vector<VertexId>> hyperedges() const;
  /// Edge-disjoint union of the bricks.
  Graph compose() const;
};

struct TBViolation {
  std::size_t hyperedge;  ///< index of the triangular brick
  VertexId vertex;
  std::string reason;
};

struct TBReport {
  std::vector<TBViolation> violations;
  bool ok() const { return violations.empty(); }
};

TBReport check_tb(const BrickDecomposition& dec);

struct BlueprintEdge {
  BrickType type;
  std::vector<VertexId> vertices;
  friend bool operator==(const BlueprintEdge&, const BlueprintEdge&) = default;
};

/// A labelled multihypergraph: one hyperedge per brick.
struct Blueprint {
  std::vector<BlueprintEdge> hyperedges;
};

TBReport check_tb(const Blueprint& bp);

enum class BlueprintErrorKind { Empty, Arity, RepeatedVertex, Disconnected, LowDegree, AdjacencyClash, TB };

std::string to_string(BlueprintErrorKind k);

class BlueprintError : public DomainError {
 public:
  BlueprintError(BlueprintErrorKind kind, const std::string& what) : DomainError(what), kind_(kind) {}
  BlueprintErrorKind kind() const { return kind_; }

 private:
  BlueprintErrorKind kind_;
};

/// Throws BlueprintError describing the first violated condition.
void validate_blueprint(const Blueprint& bp);

struct Composition {
  Graph graph;
  BrickDecomposition decomposition;
};

/// Replaces every hyperedge by a copy of its brick model. Inner vertices get
/// fresh labels above the largest hypergraph vertex, in hyperedge order.
Composition compose(const Blueprint& bp);

Blueprint blueprint_of(const BrickDecomposition& dec);

/// Random valid blueprint with about `hyperedges` hyperedges (rejection sampling).
Blueprint generate_blueprint(std::uint64_t seed, int hyperedges);

struct SquareOfCycle {
  std::vector<VertexId> order;
};

using Decomposition = std::variant<SquareOfCycle, BrickDecomposition>;

/// Structure of a minimal critical graph. Throws DomainError if G is not
/// minimal critical and InvariantViolation if no case applies.
Decomposition decompose(const Graph& g);

}  // namespace nonsep
