#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

enum class PatternKind { Wheel, Prism, K33, Theta };

/// Pattern graphs with a fixed vertex numbering:
///  - Wheel(l): center 0, rim 1..l in cyclic order; edges are the spokes
///    (0,i) for i = 1..l followed by the rim edges (i, i%l+1). Wheel(3) is K4.
///  - Prism: triangles {0,1,2} and {3,4,5}, matching i -- i+3.
///  - K33: colour classes {0,1,2} and {3,4,5}.
///  - Theta: two branch vertices 0 and 1 joined by three parallel edges.
struct PatternType {
  PatternKind kind = PatternKind::Wheel;
  int rim = 3;  ///< wheel length; unused for other kinds

  static PatternType wheel(int l);
  static PatternType k4() { return wheel(3); }
  static PatternType prism() { return {PatternKind::Prism, 0}; }
  static PatternType k33() { return {PatternKind::K33, 0}; }
  static PatternType theta() { return {PatternKind::Theta, 0}; }

  int vertex_count() const;
  std::vector<std::pair<int, int>> edges() const;
  /// "wheel", "prism", "k33" or "theta".
  std::string tag() const;
  /// Human-readable, e.g. "W5", "K4", "prism".
  std::string name() const;

  friend bool operator==(const PatternType& a, const PatternType& b) {
    return a.kind == b.kind && (a.kind != PatternKind::Wheel || a.rim == b.rim);
  }
};

/// Which pattern families a recognizer or search may return.
struct PatternSet {
  bool wheel = true;
  bool prism = true;
  bool k33 = true;
  bool theta = false;

  static PatternSet theorem() { return {}; }
  static PatternSet all() { return {true, true, true, true}; }
  static PatternSet theta_only() { return {false, false, false, true}; }
  bool allows(const PatternType& p) const;
};

/// The checkable output of every extraction: a pattern, the images of its
/// vertices (branch vertices) and, for each pattern edge in the order given by
/// PatternType::edges(), the vertex sequence of the subdivision path from the
/// image of its first endpoint to the image of its second.
struct SubdivisionCertificate {
  PatternType pattern;
  std::vector<VertexId> branch;
  std::vector<std::vector<VertexId>> paths;

  VertexSet vertex_set() const;
  std::vector<Edge> edge_list() const;
  std::size_t edge_count() const;
  /// Subgraph formed by the certificate's paths.
  Graph as_graph() const;

  friend bool operator==(const SubdivisionCertificate&, const SubdivisionCertificate&) = default;
};

class NotASubdivision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Branch skeleton of a graph, obtained by suppressing degree-2 vertices.
struct Skeleton {
  struct Link {
    VertexId a;
    VertexId b;
    std::vector<VertexId> path;  ///< from a to b, endpoints included
  };
  std::vector<VertexId> branch;  ///< vertices of degree >= 3, ascending
  std::vector<Link> links;
};

/// Throws NotASubdivision if a vertex has degree < 2 or a component is a
/// bare cycle.
Skeleton suppress_degree_two(const Graph& h);

/// Recognizes h itself (all of its edges) as a subdivision of an allowed pattern.
std::optional<SubdivisionCertificate> recognize_subdivision(const Graph& h, PatternSet allowed);

/// Recognizes G[S] as a subdivision of an allowed pattern.
std::optional<SubdivisionCertificate> recognize_induced_subdivision(
    const Graph& g, const VertexSet& s, PatternSet allowed = PatternSet::theorem());

struct Witness {
  std::string kind;  ///< "chord", "path", "component", "vertex"
  std::vector<VertexId> vertices;
};

struct VerificationReport {
  bool induced = false;
  bool pattern_ok = false;
  bool nonseparating = false;
  bool avoids_x = false;
  std::optional<Witness> witness;  ///< first violation found, if any

  bool ok() const { return induced && pattern_ok && nonseparating && avoids_x; }
};

struct VerifyOptions {
  /// For thetas: additionally demand that no subdivision path is a single edge.
  bool theta_without_short_path = false;
};

/// Itemized check of the full extraction contract. Passing no x checks
/// induced-ness, pattern and nonseparation only (avoids_x is then true).
VerificationReport verify_certificate(const Graph& g, const SubdivisionCertificate& cert,
                                      std::optional<VertexId> x, VerifyOptions opts = {});

/// Structural check only: paths lie in G, join the right branch vertices and
/// are internally disjoint. Sets `witness` on failure.
bool certificate_well_formed(const Graph& g, const SubdivisionCertificate& cert,
                             std::optional<Witness>* witness = nullptr);

// Path utilities used by the lifting constructions.

/// Index of pattern edge {i, j} in pattern.edges(), or -1.
int pattern_edge_index(const PatternType& p, int i, int j);

/// Vertices of the path between branch vertices i and j, oriented from i to j.
std::vector<VertexId> oriented_path(const SubdivisionCertificate& cert, int i, int j);

struct PathLocation {
  int branch = -1;  ///< pattern vertex if the vertex is a branch vertex
  int path = -1;    ///< otherwise the path index
  int offset = -1;  ///< and the position inside that path
};

std::optional<PathLocation> locate(const SubdivisionCertificate& cert, VertexId w);

/// For a neighbour w of branch vertex `from` in the certificate: the pattern
/// vertex at the far end of the path leaving `from` through w.
int path_target(const SubdivisionCertificate& cert, int from, VertexId w);

/// First vertex after branch[i] on the path towards branch[j].
VertexId first_step(const SubdivisionCertificate& cert, int i, int j);

/// Interior of the path between i and j (both ends excluded).
VertexSet open_path(const SubdivisionCertificate& cert, int i, int j);

/// Path between i and j with the end at i excluded and the end at j included.
VertexSet half_open_path(const SubdivisionCertificate& cert, int i, int j);

// Spanning K4 subdivisions. K4 subdivisions are stored as Wheel(3)
// certificates; they need not be induced.

/// True if the certificate's graph contains a K4 subdivision on all of its vertices.
bool admits_spanning_k4(const SubdivisionCertificate& cert);

/// A K4 subdivision using only certificate edges and spanning V(cert).
/// Throws DomainError for thetas or when no spanning K4 subdivision exists.
SubdivisionCertificate spanning_k4_subdivision(const SubdivisionCertificate& cert);

struct K4Report {
  bool is_k4_subdivision = false;
  bool nonseparating = false;
  bool avoids_x = false;
  bool ok() const { return is_k4_subdivision && nonseparating && avoids_x; }
};

/// Checks a (not necessarily induced) K4 subdivision subgraph of G.
K4Report verify_k4_subgraph(const Graph& g, const SubdivisionCertificate& k4, VertexId x);

}  // namespace nonsep
