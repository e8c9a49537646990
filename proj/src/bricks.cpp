#include "nonsep/bricks.hpp"

#include <algorithm>
#include <map>

#include "nonsep/families.hpp"

namespace nonsep {

namespace {

VertexId V(std::int64_t v) { return VertexId(v); }

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  std::vector<VertexId> out;
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Brick from_graph(BrickType t, const Graph& h, std::vector<VertexId> attachments) {
  Brick b{t, std::move(attachments), {}, h.edges()};
  for (VertexId v : h.vertices()) {
    if (std::find(b.attachments.begin(), b.attachments.end(), v) == b.attachments.end()) b.inner.insert(v);
  }
  return b;
}

}  // namespace

std::string to_string(BrickType t) {
  switch (t) {
    case BrickType::K5: return "K5";
    case BrickType::K222: return "K222";
    case BrickType::K5minus: return "K5minus";
    case BrickType::K222minus: return "K222minus";
    case BrickType::K5nabla: return "K5nabla";
    case BrickType::K222nabla: return "K222nabla";
    case BrickType::K5bowtie: return "K5bowtie";
    case BrickType::K222bowtie: return "K222bowtie";
    case BrickType::K3: return "K3";
  }
  return "";
}

std::optional<BrickType> brick_type_from_string(std::string_view s) {
  for (BrickType t : kAllBrickTypes) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::size_t attachment_count(BrickType t) {
  switch (t) {
    case BrickType::K5:
    case BrickType::K222: return 1;
    case BrickType::K5minus:
    case BrickType::K222minus:
    case BrickType::K5bowtie:
    case BrickType::K222bowtie: return 2;
    default: return 3;
  }
}

VertexSet Brick::vertex_set() const {
  VertexSet s = inner;
  s.insert(attachments.begin(), attachments.end());
  return s;
}

Graph Brick::as_graph() const {
  Graph h;
  for (VertexId v : vertex_set()) h.add_vertex(v);
  for (const Edge& e : edges) h.add_edge(e.u, e.v);
  return h;
}

Brick make_brick(BrickType t) {
  Graph h;
  switch (t) {
    case BrickType::K5: return from_graph(t, complete_graph(5), {V(0)});
    case BrickType::K222: return from_graph(t, octahedron(), {V(0)});
    case BrickType::K5minus:
      h = complete_graph(5);
      h.remove_edge(V(0), V(1));
      return from_graph(t, h, {V(0), V(1)});
    case BrickType::K222minus:
      h = octahedron();
      h.remove_edge(V(0), V(1));
      return from_graph(t, h, {V(0), V(1)});
    case BrickType::K5nabla:
    case BrickType::K222nabla:
      h = t == BrickType::K5nabla ? complete_graph(5) : octahedron();
      h.remove_edge(V(0), V(1));
      h.remove_edge(V(1), V(2));
      h.remove_edge(V(0), V(2));
      return from_graph(t, h, {V(0), V(1), V(2)});
    case BrickType::K5bowtie:
      h = complete_graph(4);
      for (int i : {0, 1}) h.add_edge(V(4), V(i));
      for (int i : {2, 3}) h.add_edge(V(5), V(i));
      return from_graph(t, h, {V(4), V(5)});
    case BrickType::K222bowtie:
      h = wheel_graph(4);
      for (int i : {1, 2}) h.add_edge(V(5), V(i));
      for (int i : {3, 4}) h.add_edge(V(6), V(i));
      return from_graph(t, h, {V(5), V(6)});
    case BrickType::K3: return from_graph(t, complete_graph(3), {V(0), V(1), V(2)});
  }
  throw DomainError("make_brick: unknown type");
}

std::optional<std::map<VertexId, VertexId>> model_map(const Brick& b) {
  Brick m = make_brick(b.type);
  if (b.attachments.size() != m.attachments.size() || b.inner.size() != m.inner.size() ||
      b.edges.size() != m.edges.size()) {
    return std::nullopt;
  }
  Graph bg = b.as_graph();
  if (bg.num_edges() != b.edges.size() || bg.num_vertices() != b.attachments.size() + b.inner.size()) {
    return std::nullopt;
  }
  Graph mg = m.as_graph();
  std::vector<VertexId> model_order = m.attachments;
  model_order.insert(model_order.end(), m.inner.begin(), m.inner.end());
  std::vector<VertexId> att = b.attachments;
  std::vector<VertexId> inn(b.inner.begin(), b.inner.end());
  std::sort(att.begin(), att.end());
  do {
    do {
      std::map<VertexId, VertexId> f;
      for (std::size_t i = 0; i < att.size(); ++i) f[model_order[i]] = att[i];
      for (std::size_t i = 0; i < inn.size(); ++i) f[model_order[att.size() + i]] = inn[i];
      bool ok = true;
      for (const Edge& e : mg.edges()) {
        if (!bg.has_edge(f[e.u], f[e.v])) {
          ok = false;
          break;
        }
      }
      if (ok) return f;
    } while (std::next_permutation(inn.begin(), inn.end()));
  } while (std::next_permutation(att.begin(), att.end()));
  return std::nullopt;
}

bool matches_model(const Brick& b) { return model_map(b).has_value(); }

bool in_class_c(const Graph& g) { return !g.empty() && is_connected(g) && g.min_degree() >= 4; }

namespace {

void require_class_c(const Graph& g, const char* who) {
  if (!in_class_c(g)) throw DomainError(std::string(who) + ": G must be connected with minimum degree at least 4");
}

void require_edge(const Graph& g, const Edge& e, const char* who) {
  if (!g.has_edge(e)) throw DomainError(std::string(who) + ": edge not in G");
}

bool critical_unchecked(const Graph& g, const Edge& e) {
  auto common = common_neighbors(g, e.u, e.v);
  for (VertexId w : common) {
    if (g.degree(w) == 4) return true;
  }
  return common.size() == 3 && g.degree(e.u) == 4 && g.degree(e.v) == 4;
}

}  // namespace

bool is_essential(const Graph& g, const Edge& e) {
  require_class_c(g, "is_essential");
  require_edge(g, e, "is_essential");
  if (g.degree(e.u) == 4 || g.degree(e.v) == 4) return true;
  return bridges(g).count(e) != 0;
}

bool is_critical(const Graph& g, const Edge& e) {
  require_class_c(g, "is_critical");
  require_edge(g, e, "is_critical");
  return critical_unchecked(g, e);
}

EdgeStatus edge_status(const Graph& g, const Edge& e) { return {is_essential(g, e), is_critical(g, e)}; }

bool is_minimal_critical(const Graph& g) {
  require_class_c(g, "is_minimal_critical");
  std::set<Edge> bridge_set = bridges(g);
  for (const Edge& e : g.edges()) {
    bool essential = g.degree(e.u) == 4 || g.degree(e.v) == 4 || bridge_set.count(e);
    if (!essential || !critical_unchecked(g, e)) return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> square_of_cycle_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 5 || g.min_degree() != 4 || g.max_degree() != 4 || !is_connected(g)) return std::nullopt;
  auto check = [&](const std::vector<VertexId>& order) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.has_edge(order[i], order[(i + 1) % n]) || !g.has_edge(order[i], order[(i + 2) % n])) return false;
    }
    return true;
  };
  if (n <= 8) {
    auto iso = find_isomorphism(square_of_cycle(static_cast<int>(n)), g);
    if (!iso) return std::nullopt;
    std::vector<VertexId> order;
    for (std::size_t i = 0; i < n; ++i) order.push_back(iso->at(VertexId(static_cast<std::int64_t>(i))));
    return order;
  }
  VertexId v0 = g.vertices().front();
  for (VertexId v1 : g.neighbors(v0)) {
    for (VertexId v2 : common_neighbors(g, v0, v1)) {
      std::vector<VertexId> order{v0, v1, v2};
      VertexSet used(order.begin(), order.end());
      while (order.size() < n) {
        std::optional<VertexId> next;
        for (VertexId w : common_neighbors(g, order[order.size() - 2], order.back())) {
          if (!used.count(w)) {
            next = w;
            break;
          }
        }
        if (!next) break;
        order.push_back(*next);
        used.insert(*next);
      }
      if (order.size() == n && check(order)) return order;
    }
  }
  return std::nullopt;
}

VertexSet BrickDecomposition::hypergraph_vertices() const {
  VertexSet s;
  for (const Brick& b : bricks) s.insert(b.attachments.begin(), b.attachments.end());
  return s;
}

std::vector<std::vector<VertexId>> BrickDecomposition::hyperedges() const {
  std::vector<std::vector<VertexId>> out;
  for (const Brick& b : bricks) out.push_back(b.attachments);
  return out;
}

Graph BrickDecomposition::compose() const {
  Graph g;
  for (const Brick& b : bricks) {
    for (VertexId v : b.vertex_set()) g.add_vertex(v);
    for (const Edge& e : b.edges) g.add_edge(e.u, e.v);
  }
  return g;
}

namespace {

TBReport tb_check(const std::vector<BlueprintEdge>& hs) {
  TBReport rep;
  std::map<VertexId, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (VertexId v : hs[i].vertices) incident[v].push_back(i);
  }
  auto intersects = [&](std::size_t a, std::size_t b) {
    for (VertexId v : hs[a].vertices) {
      if (std::find(hs[b].vertices.begin(), hs[b].vertices.end(), v) != hs[b].vertices.end()) return true;
    }
    return false;
  };
  for (std::size_t e = 0; e < hs.size(); ++e) {
    if (!is_triangular(hs[e].type)) continue;
    std::map<VertexId, std::size_t> f;
    for (VertexId x : hs[e].vertices) {
      std::vector<std::size_t> others;
      for (std::size_t i : incident[x]) {
        if (i != e) others.push_back(i);
      }
      if (others.size() != 1) {
        rep.violations.push_back({e, x, "vertex of a triangular brick lies in " + std::to_string(others.size()) +
                                            " other hyperedges instead of exactly one"});
        continue;
      }
      f[x] = others[0];
      BrickType t = hs[others[0]].type;
      if (t == BrickType::K5 || t == BrickType::K222 || t == BrickType::K5minus || t == BrickType::K222minus) {
        rep.violations.push_back({e, x, "neighbouring hyperedge has type " + to_string(t)});
      }
    }
    for (auto i = f.begin(); i != f.end(); ++i) {
      for (auto j = std::next(i); j != f.end(); ++j) {
        std::size_t fx = i->second, fy = j->second;
        if (!intersects(fx, fy)) continue;
        if (is_triangular(hs[fx].type) && is_triangular(hs[fy].type)) {
          rep.violations.push_back({e, i->first, "meets two intersecting triangular bricks"});
        }
        if (fx == fy && !is_bowtie(hs[fx].type)) {
          rep.violations.push_back({e, i->first, "shares a " + to_string(hs[fx].type) + " hyperedge with " +
                                                     std::to_string(j->first.value)});
        }
      }
    }
  }
  return rep;
}

}  // namespace

Blueprint blueprint_of(const BrickDecomposition& dec) {
  Blueprint bp;
  for (const Brick& b : dec.bricks) bp.hyperedges.push_back({b.type, b.attachments});
  return bp;
}

TBReport check_tb(const Blueprint& bp) { return tb_check(bp.hyperedges); }
TBReport check_tb(const BrickDecomposition& dec) { return tb_check(blueprint_of(dec).hyperedges); }

std::string to_string(BlueprintErrorKind k) {
  switch (k) {
    case BlueprintErrorKind::Empty: return "empty";
    case BlueprintErrorKind::Arity: return "arity";
    case BlueprintErrorKind::RepeatedVertex: return "repeated-vertex";
    case BlueprintErrorKind::Disconnected: return "disconnected";
    case BlueprintErrorKind::LowDegree: return "low-degree";
    case BlueprintErrorKind::AdjacencyClash: return "adjacency-clash";
    case BlueprintErrorKind::TB: return "tb";
  }
  return "";
}

void validate_blueprint(const Blueprint& bp) {
  using K = BlueprintErrorKind;
  const auto& hs = bp.hyperedges;
  if (hs.empty()) throw BlueprintError(K::Empty, "blueprint has no hyperedges");
  std::map<VertexId, int> degree;
  Graph skeleton;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& vs = hs[i].vertices;
    if (vs.empty() || vs.size() > 3 || vs.size() != attachment_count(hs[i].type)) {
      throw BlueprintError(K::Arity, "hyperedge " + std::to_string(i) + " has " + std::to_string(vs.size()) +
                                         " vertices but " + to_string(hs[i].type) + " needs " +
                                         std::to_string(attachment_count(hs[i].type)));
    }
    if (VertexSet(vs.begin(), vs.end()).size() != vs.size()) {
      throw BlueprintError(K::RepeatedVertex, "hyperedge " + std::to_string(i) + " repeats a vertex");
    }
    for (VertexId v : vs) {
      degree[v]++;
      skeleton.add_vertex(v);
    }
    for (std::size_t j = 1; j < vs.size(); ++j) skeleton.add_edge(vs[0], vs[j]);
  }
  if (!is_connected(skeleton)) throw BlueprintError(K::Disconnected, "hypergraph is not connected");
  for (const auto& [v, d] : degree) {
    if (d < 2) throw BlueprintError(K::LowDegree, "hypergraph vertex " + std::to_string(v.value) + " has degree 1");
  }
  std::set<Edge> triangle_edges;
  for (const auto& h : hs) {
    if (!is_triangular(h.type)) continue;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (!triangle_edges.insert(Edge(h.vertices[a], h.vertices[b])).second) {
          throw BlueprintError(K::AdjacencyClash, "two triangular bricks share an edge");
        }
      }
    }
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (is_triangular(hs[i].type) || is_bowtie(hs[i].type)) continue;
    const auto& vs = hs[i].vertices;
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (triangle_edges.count(Edge(vs[a], vs[b]))) {
          throw BlueprintError(K::AdjacencyClash, "attachments of hyperedge " + std::to_string(i) +
                                                      " are joined by a triangular brick");
        }
      }
    }
  }
  TBReport tb = check_tb(bp);
  if (!tb.ok()) {
    const auto& v = tb.violations.front();
    throw BlueprintError(K::TB, "triangular hyperedge " + std::to_string(v.hyperedge) + " at vertex " +
                                    std::to_string(v.vertex.value) + ": " + v.reason);
  }
}

Composition compose(const Blueprint& bp) {
  validate_blueprint(bp);
  std::int64_t next = 0;
  for (const auto& h : bp.hyperedges) {
    for (VertexId v : h.vertices) next = std::max(next, v.value + 1);
  }
  Composition out;
  for (const auto& h : bp.hyperedges) {
    Brick m = make_brick(h.type);
    std::map<VertexId, VertexId> f;
    for (std::size_t i = 0; i < m.attachments.size(); ++i) f[m.attachments[i]] = h.vertices[i];
    Brick b{h.type, h.vertices, {}, {}};
    for (VertexId v : m.inner) {
      f[v] = VertexId(next++);
      b.inner.insert(f[v]);
    }
    for (const Edge& e : m.edges) b.edges.emplace_back(f[e.u], f[e.v]);
    std::sort(b.edges.begin(), b.edges.end());
    out.decomposition.bricks.push_back(std::move(b));
  }
  out.graph = out.decomposition.compose();
  return out;
}

namespace {

Blueprint random_base(Rng& rng, int k) {
  static constexpr BrickType weighted[] = {
      BrickType::K5,       BrickType::K222,       BrickType::K5minus,  BrickType::K222minus,
      BrickType::K5nabla,  BrickType::K222nabla,  BrickType::K5bowtie, BrickType::K222bowtie,
      BrickType::K5nabla,  BrickType::K222nabla,  BrickType::K5bowtie, BrickType::K222bowtie};
  for (int attempt = 0; attempt < 200000; ++attempt) {
    int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1));
    Blueprint bp;
    while (static_cast<int>(bp.hyperedges.size()) < k) {
      BrickType t = weighted[rng.below(std::size(weighted))];
      std::size_t arity = attachment_count(t);
      if (static_cast<int>(arity) > p) continue;
      std::vector<VertexId> pool;
      for (int v = 0; v < p; ++v) pool.push_back(VertexId(v));
      rng.shuffle(pool);
      pool.resize(arity);
      bp.hyperedges.push_back({t, pool});
    }
    VertexSet used;
    for (const auto& h : bp.hyperedges) used.insert(h.vertices.begin(), h.vertices.end());
    std::map<VertexId, VertexId> compact;
    for (VertexId v : used) compact[v] = VertexId(static_cast<std::int64_t>(compact.size()));
    for (auto& h : bp.hyperedges) {
      for (VertexId& v : h.vertices) v = compact[v];
    }
    try {
      validate_blueprint(bp);
      return bp;
    } catch (const BlueprintError&) {
    }
  }
  throw InvariantViolation("generate_blueprint: no valid blueprint found");
}

/// Adds a K3 on three new vertices, each tied to the base by one nabla or bowtie hyperedge.
void add_triangle(Rng& rng, Blueprint& bp, const std::vector<VertexId>& base, std::int64_t& next) {
  VertexId t[3] = {VertexId(next), VertexId(next + 1), VertexId(next + 2)};
  next += 3;
  bp.hyperedges.push_back({BrickType::K3, {t[0], t[1], t[2]}});
  auto pick = [&]() { return base[rng.below(base.size())]; };
  int first = 0;
  if (rng.below(3) == 0) {
    bp.hyperedges.push_back({rng.below(2) ? BrickType::K5bowtie : BrickType::K222bowtie, {t[0], t[1]}});
    first = 2;
  }
  for (int i = first; i < 3; ++i) {
    if (base.size() >= 2 && rng.below(2)) {
      VertexId a = pick(), b = pick();
      while (b == a) b = pick();
      bp.hyperedges.push_back({rng.below(2) ? BrickType::K5nabla : BrickType::K222nabla, {t[i], a, b}});
    } else {
      bp.hyperedges.push_back({rng.below(2) ? BrickType::K5bowtie : BrickType::K222bowtie, {t[i], pick()}});
    }
  }
}

}  // namespace

Blueprint generate_blueprint(std::uint64_t seed, int hyperedges) {
  if (hyperedges < 1) throw DomainError("generate_blueprint: need at least one hyperedge");
  Rng rng(seed);
  int triangles = static_cast<int>(rng.below(static_cast<std::uint64_t>(hyperedges) / 4 + 2));
  int base_size = std::max(2, hyperedges - 4 * triangles);
  Blueprint bp = random_base(rng, base_size);
  std::vector<VertexId> base;
  std::int64_t next = 0;
  for (const auto& h : bp.hyperedges) {
    for (VertexId v : h.vertices) next = std::max(next, v.value + 1);
  }
  for (std::int64_t v = 0; v < next; ++v) base.push_back(VertexId(v));
  for (int i = 0; i < triangles; ++i) add_triangle(rng, bp, base, next);
  validate_blueprint(bp);
  return bp;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g) {}

  Decomposition run() {
    step_one();
    for (const Edge& e : g_.edges()) {
      if (uncovered_triangles(e) > 2) {
        if (auto sq = step_two(e)) return *sq;
      }
    }
    while (true) {
      std::optional<Edge> e;
      for (const Edge& f : g_.edges()) {
        if (!covered_.count(f)) {
          e = f;
          break;
        }
      }
      if (!e) break;
      if (auto sq = step_three(*e)) return *sq;
    }
    BrickDecomposition dec{bricks_};
    validate_blueprint_or_throw(dec);
    return dec;
  }

 private:
  const Graph& g_;
  std::set<Edge> covered_;
  std::vector<Brick> bricks_;

  bool adj(VertexId a, VertexId b) const { return g_.has_edge(a, b); }
  std::size_t deg(VertexId v) const { return g_.degree(v); }
  bool free(VertexId a, VertexId b) const { return !covered_.count(Edge(a, b)); }

  [[noreturn]] static void fail(const std::string& what) { throw InvariantViolation("decompose: " + what); }

  int uncovered_triangles(const Edge& e) const {
    if (!free(e.u, e.v)) return 0;
    int n = 0;
    for (VertexId z : common_neighbors(g_, e.u, e.v)) {
      if (free(e.u, z) && free(e.v, z)) n++;
    }
    return n;
  }

  std::vector<Edge> induced_edges(const VertexSet& t) const { return induced_subgraph(g_, t).edges(); }

  std::vector<Edge> incident_edges(const VertexSet& inner) const {
    std::set<Edge> out;
    for (VertexId v : inner) {
      for (VertexId w : g_.neighbors(v)) out.insert(Edge(v, w));
    }
    return {out.begin(), out.end()};
  }

  void collect(BrickType t, std::vector<VertexId> attachments, VertexSet inner, std::vector<Edge> edges) {
    std::sort(attachments.begin(), attachments.end());
    Brick b{t, attachments, std::move(inner), std::move(edges)};
    for (const Edge& e : b.edges) {
      if (covered_.count(e)) fail(to_string(t) + " brick overlaps a collected brick");
    }
    if (!matches_model(b)) fail("collected subgraph is not a " + to_string(t) + " with the expected attachments");
    Graph bg = b.as_graph();
    for (VertexId v : b.inner) {
      if (bg.degree(v) != deg(v)) fail("inner vertex of " + to_string(t) + " has edges outside the brick");
    }
    for (std::size_t i = 0; i < attachments.size(); ++i) {
      for (std::size_t j = i + 1; j < attachments.size(); ++j) {
        if (!adj(attachments[i], attachments[j]) || is_triangular(t)) continue;
        if (!is_bowtie(t)) fail("attachments of " + to_string(t) + " are adjacent");
        if (free(attachments[i], attachments[j])) fail("edge between bowtie attachments not covered by a triangle");
      }
    }
    for (const Edge& e : b.edges) covered_.insert(e);
    bricks_.push_back(std::move(b));
  }

  void step_one() {
    std::map<Edge, std::size_t> tri;
    for (const Edge& e : g_.edges()) tri[e] = common_neighbors(g_, e.u, e.v).size();
    std::set<std::vector<VertexId>> triangles;
    for (const Edge& e : g_.edges()) {
      if (tri[e] == 0) fail("edge on no triangle");
      if (tri[e] != 1) continue;
      VertexId z = common_neighbors(g_, e.u, e.v).front();
      if (tri[Edge(e.u, z)] != 1 || tri[Edge(e.v, z)] != 1) continue;
      std::vector<VertexId> t{e.u, e.v, z};
      std::sort(t.begin(), t.end());
      triangles.insert(t);
    }
    std::map<VertexId, int> f_degree;
    for (const auto& t : triangles) {
      for (VertexId v : t) f_degree[v] += 2;
    }
    for (const auto& [v, d] : f_degree) {
      if (deg(v) != 4 || (d != 2 && d != 4)) fail("triangle edges violate the degree pattern");
    }
    for (const auto& t : triangles) {
      collect(BrickType::K3, t, {}, {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])});
    }
  }

  std::optional<SquareOfCycle> whole_graph(std::size_t n) const {
    if (!bricks_.empty() || g_.num_vertices() != n) fail("brick is a whole component but other bricks exist");
    auto order = square_of_cycle_order(g_);
    if (!order) fail("expected the square of a cycle");
    return SquareOfCycle{*order};
  }

  std::optional<SquareOfCycle> step_two(Edge e) {
    VertexId x = e.u, y = e.v;
    if (deg(x) != 4) std::swap(x, y);
    if (deg(x) != 4) fail("edge on many triangles without a degree-4 end");
    auto abc = common_neighbors(g_, x, y);
    if (abc.size() != 3) fail("degree-4 end does not see three common neighbours");
    VertexSet t{x, y, abc[0], abc[1], abc[2]};
    if (deg(y) > 4) {
      if (induced_subgraph(g_, t).num_edges() != 10) fail("high-degree end without a K5 endblock");
      collect(BrickType::K5, {y}, {x, abc[0], abc[1], abc[2]}, induced_edges(t));
      return std::nullopt;
    }
    std::vector<Edge> among;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (adj(abc[i], abc[j])) among.emplace_back(abc[i], abc[j]);
      }
    }
    auto inner_without = [&](std::vector<VertexId> att) {
      VertexSet in = t;
      for (VertexId v : att) in.erase(v);
      return in;
    };
    switch (among.size()) {
      case 3: {
        std::vector<VertexId> high;
        for (VertexId v : abc) {
          if (deg(v) > 4) high.push_back(v);
        }
        if (high.empty()) return whole_graph(5);
        if (high.size() > 1) fail("K5 with two high-degree vertices");
        collect(BrickType::K5, high, inner_without(high), induced_edges(t));
        return std::nullopt;
      }
      case 2: {
        VertexId m = among[0].u == among[1].u || among[0].u == among[1].v ? among[0].u : among[0].v;
        std::vector<VertexId> att;
        for (VertexId v : abc) {
          if (v != m) att.push_back(v);
        }
        collect(BrickType::K5minus, att, inner_without(att), induced_edges(t));
        return std::nullopt;
      }
      case 1: {
        VertexId a = among[0].u, b = among[0].v, c = abc[0];
        for (VertexId v : abc) {
          if (v != a && v != b) c = v;
        }
        if (deg(a) != 4 || deg(b) != 4) fail("bowtie centre edge with a high-degree end");
        std::optional<VertexId> u;
        for (VertexId w : g_.neighbors(a)) {
          if (w != x && w != y && w != b) u = w;
        }
        if (!u || *u == c || !adj(b, *u)) fail("bowtie neighbours do not close up");
        VertexSet inner{x, y, a, b};
        collect(BrickType::K5bowtie, {c, *u}, inner, incident_edges(inner));
        return std::nullopt;
      }
      default:
        collect(BrickType::K5nabla, abc, {x, y}, induced_edges(t));
        return std::nullopt;
    }
  }

  /// A K4- with uncovered edges containing e, returned as its diagonal plus the two other vertices.
  std::optional<std::tuple<VertexId, VertexId, VertexId, VertexId>> find_k4minus(const Edge& e) const {
    auto tri_partners = [&](VertexId u, VertexId v) {
      std::vector<VertexId> out;
      if (!free(u, v)) return out;
      for (VertexId z : common_neighbors(g_, u, v)) {
        if (free(u, z) && free(v, z)) out.push_back(z);
      }
      return out;
    };
    auto as_diagonal = [&](VertexId u, VertexId v) -> std::optional<std::tuple<VertexId, VertexId, VertexId, VertexId>> {
      auto p = tri_partners(u, v);
      if (p.size() >= 2) return std::make_tuple(u, v, p[0], p[1]);
      return std::nullopt;
    };
    if (auto d = as_diagonal(e.u, e.v)) return d;
    for (VertexId z : tri_partners(e.u, e.v)) {
      if (auto d = as_diagonal(e.u, z)) return d;
      if (auto d = as_diagonal(e.v, z)) return d;
    }
    return std::nullopt;
  }

  std::optional<SquareOfCycle> step_three(const Edge& e) {
    auto k = find_k4minus(e);
    if (!k) fail("uncovered edge lies on no uncovered K4-");
    auto [x, y, a, b] = *k;
    auto common = common_neighbors(g_, x, y);
    if (common.size() != 2) fail("diagonal of K4- has more than two common neighbours");
    if (adj(a, b)) fail("K4- closes up to K4");
    if (deg(x) != 4) std::swap(x, y);
    if (deg(x) != 4) fail("K4- diagonal without a degree-4 end");
    auto fourth = [&](VertexId v, std::initializer_list<VertexId> known) -> VertexId {
      for (VertexId w : g_.neighbors(v)) {
        if (std::find(known.begin(), known.end(), w) == known.end()) return w;
      }
      fail("missing neighbour");
    };
    VertexId c = fourth(x, {a, b, y});
    if (deg(y) > 4) {
      if (deg(c) != 4 || !adj(c, a) || !adj(c, b)) fail("high-degree diagonal end without an octahedron");
      VertexId d = fourth(c, {x, a, b});
      VertexSet t{x, y, a, b, c, d};
      if (adj(d, y)) {
        collect(BrickType::K222, {y}, {x, a, b, c, d}, induced_edges(t));
      } else {
        collect(BrickType::K222minus, {y, d}, {x, a, b, c}, induced_edges(t));
      }
      return std::nullopt;
    }
    VertexId d = fourth(y, {a, b, x});
    if (c == d) fail("diagonal ends share a third neighbour");
    auto hub = [&](VertexId v) { return deg(v) == 4 && adj(v, c) && adj(v, d); };
    if (!hub(a) && hub(b)) std::swap(a, b);
    if (!hub(a)) {
      if (!bricks_.empty()) fail("square-of-cycle configuration after bricks were collected");
      return whole_graph(g_.num_vertices());
    }
    std::vector<VertexId> rest{b, c, d};
    VertexSet t{a, x, y, b, c, d};
    std::vector<Edge> among;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (adj(rest[i], rest[j])) among.emplace_back(rest[i], rest[j]);
      }
    }
    switch (among.size()) {
      case 0:
        collect(BrickType::K222nabla, rest, {a, x, y}, induced_edges(t));
        return std::nullopt;
      case 3: {
        std::vector<VertexId> high;
        for (VertexId v : rest) {
          if (deg(v) > 4) high.push_back(v);
        }
        if (high.empty()) return whole_graph(6);
        if (high.size() > 1) fail("octahedron with two high-degree vertices");
        VertexSet inner = t;
        inner.erase(high[0]);
        collect(BrickType::K222, high, inner, induced_edges(t));
        return std::nullopt;
      }
      case 2: {
        std::vector<VertexId> att;
        for (VertexId v : rest) {
          int touching = 0;
          for (const Edge& f : among) touching += f.contains(v);
          if (touching == 1) att.push_back(v);
        }
        VertexSet inner = t;
        for (VertexId v : att) inner.erase(v);
        collect(BrickType::K222minus, att, inner, induced_edges(t));
        return std::nullopt;
      }
      default: {
        VertexId p = among[0].u, q = among[0].v, r = b;
        for (VertexId v : rest) {
          if (v != p && v != q) r = v;
        }
        if (deg(p) != 4) std::swap(p, q);
        if (deg(p) != 4 || deg(q) != 4) fail("octahedral bowtie with a high-degree vertex");
        std::optional<VertexId> u;
        for (VertexId w : g_.neighbors(p)) {
          if (w != a && w != q && w != x && w != y) u = w;
        }
        if (!u || !adj(q, *u)) fail("octahedral bowtie does not close up");
        VertexSet inner{x, y, a, p, q};
        collect(BrickType::K222bowtie, {r, *u}, inner, incident_edges(inner));
        return std::nullopt;
      }
    }
  }

  static void validate_blueprint_or_throw(const BrickDecomposition& dec) {
    try {
      validate_blueprint(blueprint_of(dec));
    } catch (const BlueprintError& err) {
      fail(std::string("collected hypergraph is invalid: ") + err.what());
    }
  }
};

}  // namespace

Decomposition decompose(const Graph& g) {
  if (!is_minimal_critical(g)) throw DomainError("decompose: G is not minimal critical");
  return Decomposer(g).run();
}

}  // namespace nonsep
