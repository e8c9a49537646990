#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonsep {

/// Raised when an operation is called outside its precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails. Under correct inputs this means
/// a bug, or a counterexample to one of the structure results relied upon.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct VertexId {
  std::int64_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::int64_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

using VertexSet = std::set<VertexId>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(VertexId w) const { return w == u || w == v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.u << "-" << e.v;
}

/// Simple undirected graph with stable integer labels.
///
/// Adjacency lists are kept sorted, so iteration order (vertices, neighbours,
/// edges) is always ascending by label. Every algorithm in the library relies
/// on this for deterministic output.
class Graph {
 public:
  Graph() = default;

  /// Graph on labels 0..n-1 with the given edges.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  void add_vertex(VertexId v);
  /// Adds the edge uv, creating missing endpoints. Loops are rejected;
  /// adding an existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  std::vector<VertexId> vertices() const;
  VertexSet vertex_set() const;
  std::vector<Edge> edges() const;

  /// Smallest label strictly greater than every label in use (0 if empty).
  VertexId fresh_label() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

struct Contraction {
  Graph graph;
  VertexId merged;  ///< fresh label of the merged vertex
  VertexId first;   ///< former endpoints, recorded for lifting
  VertexId second;
};

/// G/e: contract e to a fresh vertex and simplify.
Contraction contract_edge(const Graph& g, const Edge& e);

/// Same, with an explicit label for the merged vertex (must be unused).
Contraction contract_edge(const Graph& g, const Edge& e, VertexId merged);

Graph delete_edge(const Graph& g, const Edge& e);

/// G[S]. Throws DomainError if S is not a subset of V(G).
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S. Labels outside V(G) are ignored.
Graph remove_vertices(const Graph& g, const VertexSet& s);

std::vector<VertexSet> components(const Graph& g);

/// Exactly one component; the empty graph is not connected.
bool is_connected(const Graph& g);

/// Convenience for nonseparation checks: is G - S nonempty and connected?
bool is_connected_without(const Graph& g, const VertexSet& s);

/// Edges whose removal disconnects their component.
std::set<Edge> bridges(const Graph& g);

/// k-connectivity by unit-capacity max-flow on the split digraph.
bool is_k_connected(const Graph& g, int k);

/// k-connectivity by enumerating every vertex set of size < k. Exponential;
/// meant as an independent cross-check on small graphs.
bool is_k_connected_by_separators(const Graph& g, int k);

/// Line graph with an explicit bijection between its vertices and E(Y).
struct LineGraph {
  Graph graph;
  std::map<VertexId, Edge> edge_of;  ///< vertex of L(Y) -> edge of Y
  std::map<Edge, VertexId> vertex_of;
};

/// Vertices are labelled 0..m-1 following the ascending edge order of Y.
LineGraph line_graph(const Graph& y);

/// C_l^2 on labels 0..l-1 with i adjacent to i+-1, i+-2 (mod l). Requires l >= 5.
Graph square_of_cycle(int length);

/// Exact isomorphism test by backtracking; intended for small graphs.
bool are_isomorphic(const Graph& a, const Graph& b);

/// One isomorphism a -> b, if any exists.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& a, const Graph& b);

/// Relabel vertices by an injective map (unmapped vertices keep their label).
Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& map);

}  // namespace nonsep
