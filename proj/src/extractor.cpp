#include "nonsep/extractor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <numeric>

#include "nonsep/bricks.hpp"
#include "nonsep/cubic_theta.hpp"
#include "nonsep/lifting.hpp"

namespace nonsep {

std::string to_string(ExtractMode m) { return m == ExtractMode::FourConnected ? "4conn" : "mindeg4"; }

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::DeleteEdge: return "DeleteEdge";
    case ReductionKind::ContractEdge: return "ContractEdge";
    case ReductionKind::BrickSurgery: return "BrickSurgery";
  }
  return "";
}

std::string to_string(TerminalCase t) {
  switch (t) {
    case TerminalCase::SquareOfCycle: return "SquareOfCycle";
    case TerminalCase::LineOfCubic: return "LineOfCubic";
    case TerminalCase::BrickCase: return "BrickCase";
  }
  return "";
}

std::vector<Graph> replay(const Graph& g, const ReductionTrace& trace) {
  std::vector<Graph> out{g};
  for (const ReductionStep& s : trace.steps) {
    const Graph& cur = out.back();
    switch (s.kind) {
      case ReductionKind::DeleteEdge:
        if (!s.edge) throw DomainError("replay: deletion without an edge");
        out.push_back(delete_edge(cur, *s.edge));
        break;
      case ReductionKind::ContractEdge:
        if (!s.edge || !s.merged) throw DomainError("replay: contraction without edge data");
        out.push_back(contract_edge(cur, *s.edge, *s.merged).graph);
        break;
      case ReductionKind::BrickSurgery:
        if (!s.after) throw DomainError("replay: surgery without a result graph");
        out.push_back(*s.after);
        break;
    }
    if (out.back().num_vertices() != s.after_vertices || out.back().num_edges() != s.after_edges) {
      throw DomainError("replay: step does not reproduce the recorded graph");
    }
  }
  return out;
}

std::optional<SquareOrder> is_square_of_cycle(const Graph& g) {
  auto order = square_of_cycle_order(g);
  if (!order) return std::nullopt;
  return SquareOrder{static_cast<int>(order->size()), *order};
}

namespace {

struct Krausz {
  const Graph& g;
  std::vector<std::array<VertexId, 3>> tris;
  std::map<Edge, std::vector<std::size_t>> by_edge;
  std::vector<Edge> edges;
  std::set<Edge> covered;
  std::map<VertexId, int> uses;
  std::vector<std::size_t> chosen;

  explicit Krausz(const Graph& graph) : g(graph), edges(graph.edges()) {
    for (const Edge& e : edges) {
      for (VertexId w : g.neighbors(e.v)) {
        if (w > e.v && g.has_edge(e.u, w)) {
          std::size_t id = tris.size();
          tris.push_back({e.u, e.v, w});
          by_edge[e].push_back(id);
          by_edge[Edge(e.u, w)].push_back(id);
          by_edge[Edge(e.v, w)].push_back(id);
        }
      }
    }
  }

  std::array<Edge, 3> sides(std::size_t t) const {
    const auto& a = tris[t];
    return {Edge(a[0], a[1]), Edge(a[1], a[2]), Edge(a[0], a[2])};
  }

  bool solve(std::size_t from) {
    while (from < edges.size() && covered.count(edges[from])) ++from;
    if (from == edges.size()) return true;
    for (std::size_t t : by_edge[edges[from]]) {
      auto s = sides(t);
      if (std::any_of(s.begin(), s.end(), [&](const Edge& e) { return covered.count(e); })) continue;
      if (std::any_of(tris[t].begin(), tris[t].end(), [&](VertexId v) { return uses[v] >= 2; })) continue;
      for (const Edge& e : s) covered.insert(e);
      for (VertexId v : tris[t]) uses[v]++;
      chosen.push_back(t);
      if (solve(from + 1)) return true;
      chosen.pop_back();
      for (VertexId v : tris[t]) uses[v]--;
      for (const Edge& e : s) covered.erase(e);
    }
    return false;
  }
};

}  // namespace

std::optional<CubicRoot> is_line_graph_of_cubic(const Graph& g) {
  if (g.num_vertices() < 6 || g.min_degree() != 4 || g.max_degree() != 4 || !is_connected(g)) return std::nullopt;
  Krausz k(g);
  if (!k.solve(0)) return std::nullopt;
  std::map<VertexId, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < k.chosen.size(); ++i) {
    for (VertexId v : k.tris[k.chosen[i]]) at[v].push_back(i);
  }
  CubicRoot root;
  for (std::size_t i = 0; i < k.chosen.size(); ++i) root.y.add_vertex(VertexId(static_cast<std::int64_t>(i)));
  for (const auto& [v, ts] : at) {
    if (ts.size() != 2) return std::nullopt;
    Edge e(VertexId(static_cast<std::int64_t>(ts[0])), VertexId(static_cast<std::int64_t>(ts[1])));
    if (root.y.has_edge(e)) return std::nullopt;
    root.y.add_edge(e.u, e.v);
    root.edge_of[v] = e;
  }
  return root;
}

std::optional<Edge> find_contractible_edge(const Graph& g) {
  if (!is_k_connected(g, 4)) throw DomainError("find_contractible_edge: G is not 4-connected");
  for (const Edge& e : g.edges()) {
    if (is_k_connected(contract_edge(g, e).graph, 4)) return e;
  }
  if (is_square_of_cycle(g) || is_line_graph_of_cubic(g)) return std::nullopt;
  std::string dump;
  for (const Edge& e : g.edges()) dump += " " + std::to_string(e.u.value) + "-" + std::to_string(e.v.value);
  throw InvariantViolation("find_contractible_edge: no contractible edge in a 4-connected graph that is neither a "
                           "square of a cycle nor a line graph of a cubic graph; edges:" +
                           dump);
}

namespace {

std::optional<SubdivisionCertificate> try_certify(const Graph& g, const VertexSet& s, VertexId x) {
  if (s.count(x)) return std::nullopt;
  for (VertexId v : s) {
    if (!g.has_vertex(v)) return std::nullopt;
  }
  auto c = recognize_induced_subdivision(g, s, PatternSet::theorem());
  if (!c || !verify_certificate(g, *c, x).ok()) return std::nullopt;
  return c;
}

SubdivisionCertificate certify(const Graph& g, const VertexSet& s, VertexId x, const std::string& where) {
  if (auto c = try_certify(g, s, x)) return *c;
  throw InvariantViolation("extract: " + where + " is not a nonseparating induced subdivision avoiding x");
}

}  // namespace

SubdivisionCertificate square_of_cycle_certificate(const Graph& g, const SquareOrder& sq, VertexId x) {
  const int l = sq.length;
  auto it = std::find(sq.order.begin(), sq.order.end(), x);
  if (it == sq.order.end()) throw DomainError("square_of_cycle_certificate: x is not on the cycle");
  const int pos = static_cast<int>(it - sq.order.begin());
  auto rotated = [&](int dir) {
    std::vector<VertexId> r(l);
    for (int i = 0; i < l; ++i) r[i] = sq.order[((pos + dir * (i + 1)) % l + l) % l];
    return r;
  };
  std::vector<VertexId> r = rotated(1);
  if (!(r[0] < r[l - 2])) r = rotated(-1);
  VertexSet s;
  const int head = l % 2 == 0 ? 5 : 4;
  for (int i = 0; i < head; ++i) s.insert(r[i]);
  for (int i = head + 1; i <= l - 2; i += 2) s.insert(r[i]);
  SubdivisionCertificate c = certify(g, s, x, "square-of-cycle construction");
  if (c.pattern != PatternType::wheel(l % 2 == 0 ? 4 : 3)) {
    throw InvariantViolation("square_of_cycle_certificate: unexpected pattern " + c.pattern.name());
  }
  return c;
}

SubdivisionCertificate line_graph_certificate(const Graph& g, const CubicRoot& root, VertexId x) {
  auto it = root.edge_of.find(x);
  if (it == root.edge_of.end()) throw DomainError("line_graph_certificate: x is not a vertex of G");
  if (root.y.num_vertices() == 4) throw DomainError("line_graph_certificate: root is K4");
  std::map<Edge, VertexId> vertex_of;
  for (const auto& [v, e] : root.edge_of) vertex_of[e] = v;
  SubdivisionCertificate theta = find_theta(root.y, it->second.u);
  VertexSet s;
  for (const Edge& e : theta.edge_list()) s.insert(vertex_of.at(e));
  return certify(g, s, x, "line graph of a theta");
}

namespace {

using Lifter =
    std::function<std::pair<SubdivisionCertificate, std::string>(const Graph&, VertexId, const Graph&,
                                                                 const SubdivisionCertificate&)>;

struct Outcome {
  std::optional<SubdivisionCertificate> cert;
  TerminalCase terminal = TerminalCase::SquareOfCycle;
  std::string detail;
  ReductionStep step;
  Graph child;
  VertexId child_x;
  Lifter lift;
};

Outcome finish(SubdivisionCertificate c, TerminalCase t, std::string detail) {
  Outcome o;
  o.cert = std::move(c);
  o.terminal = t;
  o.detail = std::move(detail);
  return o;
}

Outcome reduce(const Graph& g, VertexId x, ReductionKind kind, std::string surgery, Graph child, VertexId cx,
               Lifter lift) {
  Outcome o;
  o.step.kind = kind;
  o.step.surgery = std::move(surgery);
  o.step.before_vertices = g.num_vertices();
  o.step.before_edges = g.num_edges();
  o.step.after_vertices = child.num_vertices();
  o.step.after_edges = child.num_edges();
  o.step.avoid_before = x;
  o.step.avoid_after = cx;
  if (kind == ReductionKind::BrickSurgery) o.step.after = child;
  o.child = std::move(child);
  o.child_x = cx;
  o.lift = std::move(lift);
  return o;
}

Outcome contract_step(const Graph& g, VertexId x, const Edge& e) {
  Contraction c = contract_edge(g, e);
  VertexId cx = e.contains(x) ? c.merged : x;
  VertexId merged = c.merged;
  Outcome o = reduce(g, x, ReductionKind::ContractEdge, "", std::move(c.graph), cx,
                     [e, merged](const Graph& parent, VertexId, const Graph& child, const SubdivisionCertificate& h) {
                       LiftContext ctx{parent, child, ContractOp{e.u, e.v, merged}, h};
                       LiftResult r = lift_through_contraction(ctx);
                       return std::make_pair(r.cert, to_string(r.branch));
                     });
  o.step.edge = e;
  o.step.merged = merged;
  return o;
}

Outcome delete_step(const Graph& g, VertexId x, const Edge& e) {
  Outcome o = reduce(g, x, ReductionKind::DeleteEdge, "", delete_edge(g, e), x,
                     [e](const Graph& parent, VertexId, const Graph& child, const SubdivisionCertificate& h) {
                       LiftContext ctx{parent, child, DeleteOp{e.u, e.v}, h};
                       LiftResult r = lift_through_deletion(ctx);
                       return std::make_pair(r.cert, to_string(r.branch));
                     });
  o.step.edge = e;
  return o;
}

Lifter same_vertices(std::string how) {
  return [how](const Graph& parent, VertexId px, const Graph&, const SubdivisionCertificate& h) {
    return std::make_pair(certify(parent, h.vertex_set(), px, how), how);
  };
}

Extraction drive(const Graph& g, VertexId x, const std::function<Outcome(const Graph&, VertexId)>& handle,
                 const std::function<bool(const Graph&)>& in_class, const std::string& who) {
  struct Level {
    ReductionStep step;
    std::shared_ptr<const Graph> parent, child;
    VertexId parent_x;
    Lifter lift;
  };
  std::vector<Level> levels;
  auto cur = std::make_shared<const Graph>(g);
  VertexId cx = x;
  Extraction out;
  while (true) {
    Outcome o = handle(*cur, cx);
    if (o.cert) {
      if (!verify_certificate(*cur, *o.cert, cx).ok()) throw InvariantViolation(who + ": terminal certificate fails");
      out.cert = *o.cert;
      out.trace.terminal = o.terminal;
      out.trace.terminal_detail = o.detail;
      break;
    }
    if (!in_class(o.child)) throw InvariantViolation(who + ": reduced graph left the class");
    auto next = std::make_shared<const Graph>(std::move(o.child));
    levels.push_back({std::move(o.step), cur, next, cx, std::move(o.lift)});
    cur = next;
    cx = o.child_x;
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    auto [c, how] = it->lift(*it->parent, it->parent_x, *it->child, out.cert);
    if (!verify_certificate(*it->parent, c, it->parent_x).ok()) {
      throw InvariantViolation(who + ": lifted certificate fails after " + to_string(it->step.kind));
    }
    out.cert = std::move(c);
    it->step.lift = how;
  }
  for (Level& l : levels) out.trace.steps.push_back(std::move(l.step));
  return out;
}

Outcome handle_4connected(const Graph& g, VertexId x) {
  if (auto sq = is_square_of_cycle(g)) {
    return finish(square_of_cycle_certificate(g, *sq, x), TerminalCase::SquareOfCycle,
                  "C" + std::to_string(sq->length) + "^2");
  }
  if (auto root = is_line_graph_of_cubic(g)) {
    return finish(line_graph_certificate(g, *root, x), TerminalCase::LineOfCubic,
                  "L(Y), |V(Y)| = " + std::to_string(root->y.num_vertices()));
  }
  auto e = find_contractible_edge(g);
  if (!e) throw InvariantViolation("extract_4connected: no contractible edge");
  return contract_step(g, x, *e);
}

/// G with the vertex set s replaced by one vertex v adjacent to N(s).
Graph contract_set(const Graph& g, const VertexSet& s, VertexId v) {
  Graph h = remove_vertices(g, s);
  h.add_vertex(v);
  for (VertexId a : s) {
    for (VertexId w : g.neighbors(a)) {
      if (!s.count(w)) h.add_edge(v, w);
    }
  }
  return h;
}

/// Two copies of h sharing only w; the second copy is shifted by `offset`.
Graph glue_two_copies(const Graph& h, VertexId w, std::int64_t offset) {
  auto shift = [&](VertexId v) { return v == w ? w : VertexId(v.value + offset); };
  Graph out = h;
  for (VertexId v : h.vertices()) out.add_vertex(shift(v));
  for (const Edge& e : h.edges()) out.add_edge(shift(e.u), shift(e.v));
  return out;
}

Lifter unshift(std::int64_t offset, std::string how) {
  return [offset, how](const Graph& parent, VertexId px, const Graph&, const SubdivisionCertificate& h) {
    VertexSet s;
    for (VertexId v : h.vertex_set()) s.insert(v.value >= offset ? VertexId(v.value - offset) : v);
    return std::make_pair(certify(parent, s, px, how), how);
  };
}

/// Simple cycles of the pattern graph as sets of pattern-edge indices.
std::vector<std::vector<int>> pattern_cycles(const PatternType& p) {
  auto es = p.edges();
  const int n = p.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    adj[es[i].first].push_back({es[i].second, i});
    adj[es[i].second].push_back({es[i].first, i});
  }
  std::set<std::vector<int>> found;
  std::vector<int> path_edges;
  std::vector<bool> on(n, false);
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (auto [w, id] : adj[v]) {
      if (!path_edges.empty() && id == path_edges.back()) continue;
      if (w == s && path_edges.size() >= 2) {
        std::vector<int> c = path_edges;
        c.push_back(id);
        std::sort(c.begin(), c.end());
        found.insert(c);
      } else if (w > s && !on[w]) {
        on[w] = true;
        path_edges.push_back(id);
        dfs(s, w);
        path_edges.pop_back();
        on[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
  return {found.begin(), found.end()};
}

class BrickSurgery {
 public:
  BrickSurgery(const Graph& g, VertexId x, const BrickDecomposition& dec) : g_(g), x_(x), bricks_(dec.bricks) {
    for (std::size_t i = 0; i < bricks_.size(); ++i) {
      for (VertexId v : bricks_[i].attachments) incident_[v].push_back(i);
    }
  }

  Outcome run() {
    if (auto o = nabla_to_triangle()) return *o;
    if (auto o = separating_two_hyperedge()) return *o;
    if (auto o = cutvertex()) return *o;
    if (auto o = endblock_wheel()) return *o;
    if (std::all_of(bricks_.begin(), bricks_.end(), [](const Brick& b) { return is_triangular(b.type); })) {
      auto root = is_line_graph_of_cubic(g_);
      if (!root) throw InvariantViolation("extract: all bricks triangular but no cubic root");
      return finish(line_graph_certificate(g_, *root, x_), TerminalCase::LineOfCubic,
                    "line graph of a cubic graph on " + std::to_string(root->y.num_vertices()) + " vertices");
    }
    return last_small_hyperedge();
  }

 private:
  const Graph& g_;
  VertexId x_;
  std::vector<Brick> bricks_;
  std::map<VertexId, std::vector<std::size_t>> incident_;

  static std::string prefix(const Brick& b) { return to_string(b.type) + ": "; }

  std::optional<Outcome> nabla_to_triangle() {
    for (const Brick& b : bricks_) {
      if (b.attachments.size() != 3 || is_triangular(b.type)) continue;
      Graph child = remove_vertices(g_, b.inner);
      std::vector<Edge> added;
      const auto& a = b.attachments;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          if (g_.has_edge(a[i], a[j])) throw InvariantViolation("extract: nabla attachments are adjacent");
          child.add_edge(a[i], a[j]);
          added.emplace_back(a[i], a[j]);
        }
      }
      VertexId cx = x_;
      if (b.inner.count(x_)) {
        for (VertexId v : a) {
          if (g_.has_edge(v, x_)) {
            cx = v;
            break;
          }
        }
      }
      Brick brick = b;
      Lifter lift = [brick, added](const Graph& parent, VertexId px, const Graph&, const SubdivisionCertificate& h) {
        auto he = h.edge_list();
        std::set<Edge> hset(he.begin(), he.end());
        std::vector<Edge> used;
        for (const Edge& e : added) {
          if (hset.count(e)) used.push_back(e);
        }
        VertexSet s = h.vertex_set();
        if (used.empty()) return std::make_pair(certify(parent, s, px, "nabla lift"), std::string("nabla unused"));
        if (used.size() == 1) {
          for (VertexId i : brick.inner) {
            if (i == px || !parent.has_edge(i, used[0].u) || !parent.has_edge(i, used[0].v)) continue;
            VertexSet t = s;
            t.insert(i);
            if (auto c = try_certify(parent, t, px)) return std::make_pair(*c, std::string("nabla path"));
          }
          throw InvariantViolation("extract: no inner vertex replaces the triangle edge");
        }
        for (const auto& cyc : pattern_cycles(h.pattern)) {
          VertexSet t;
          std::set<Edge> ce;
          for (int id : cyc) {
            const auto& path = h.paths[id];
            t.insert(path.begin(), path.end());
            for (std::size_t k = 0; k + 1 < path.size(); ++k) ce.insert(Edge(path[k], path[k + 1]));
          }
          int count = 0;
          for (const Edge& e : added) count += ce.count(e) ? 1 : 0;
          bool misses = std::any_of(brick.attachments.begin(), brick.attachments.end(),
                                    [&](VertexId v) { return !t.count(v); });
          if (count != 1 || !misses) continue;
          t.insert(brick.inner.begin(), brick.inner.end());
          if (auto c = try_certify(parent, t, px)) return std::make_pair(*c, std::string("nabla cycle wheel"));
        }
        throw InvariantViolation("extract: no cycle through one triangle edge lifts to a wheel");
      };
      return reduce(g_, x_, ReductionKind::BrickSurgery, prefix(b) + "nabla-to-triangle", std::move(child), cx,
                    std::move(lift));
    }
    return std::nullopt;
  }

  bool separating(std::size_t e) const {
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
      auto it = parent.find(v);
      if (it == parent.end() || it->second == v) return v;
      return it->second = find(it->second);
    };
    for (std::size_t i = 0; i < bricks_.size(); ++i) {
      if (i == e) continue;
      const auto& a = bricks_[i].attachments;
      for (std::size_t j = 1; j < a.size(); ++j) {
        VertexId r1 = find(a[0]), r2 = find(a[j]);
        if (r1 != r2) parent[r1] = r2;
      }
    }
    return find(bricks_[e].attachments[0]) != find(bricks_[e].attachments[1]);
  }

  Outcome contract_brick(const Brick& b, const std::string& name) {
    VertexSet vb = b.vertex_set();
    VertexId v = g_.fresh_label();
    VertexId cx = vb.count(x_) ? v : x_;
    std::vector<VertexId> att = b.attachments;
    Lifter lift = [vb, v, att](const Graph& parent, VertexId px, const Graph&, const SubdivisionCertificate& h) {
      VertexSet s = h.vertex_set();
      if (!s.count(v)) return std::make_pair(certify(parent, s, px, "brick contraction"), std::string("avoids brick"));
      s.erase(v);
      for (VertexId a : att) {
        VertexSet t = s;
        t.insert(a);
        if (auto c = try_certify(parent, t, px)) return std::make_pair(*c, "expanded to " + std::to_string(a.value));
      }
      throw InvariantViolation("extract: contracted brick vertex does not expand to an attachment");
    };
    return reduce(g_, x_, ReductionKind::BrickSurgery, prefix(b) + name, contract_set(g_, vb, v), cx,
                  std::move(lift));
  }

  std::optional<Outcome> separating_two_hyperedge() {
    for (std::size_t i = 0; i < bricks_.size(); ++i) {
      if (bricks_[i].attachments.size() == 2 && separating(i)) {
        return contract_brick(bricks_[i], "separating-2-hyperedge-contraction");
      }
    }
    return std::nullopt;
  }

  std::optional<Outcome> cutvertex() {
    for (const auto& [v, inc] : incident_) {
      if (inc.size() <= 2 || is_connected_without(g_, {v})) continue;
      std::optional<VertexSet> comp;
      for (const VertexSet& c : components(remove_vertices(g_, {v}))) {
        if (!c.count(x_)) {
          comp = c;
          break;
        }
      }
      if (!comp) continue;
      for (std::size_t i : inc) {
        if (bricks_[i].attachments.size() == 1 && bricks_[i].inner == *comp) {
          return finish(certify(g_, *comp, x_, "endblock brick"), TerminalCase::BrickCase,
                        to_string(bricks_[i].type) + " endblock at a cutvertex");
        }
      }
      VertexSet keep = *comp;
      keep.insert(v);
      return reduce(g_, x_, ReductionKind::BrickSurgery, "cutvertex-restriction", induced_subgraph(g_, keep), v,
                    same_vertices("restriction"));
    }
    return std::nullopt;
  }

  std::optional<Outcome> endblock_wheel() {
    for (const Brick& b : bricks_) {
      if (b.attachments.size() > 2 || b.inner.count(x_)) continue;
      std::vector<VertexSet> candidates;
      if (b.attachments.size() == 1 || is_bowtie(b.type)) {
        candidates.push_back(b.inner);
      } else {
        for (VertexId v : b.attachments) {
          if (v == x_) continue;
          VertexSet s = b.inner;
          s.insert(v);
          candidates.push_back(s);
        }
      }
      for (const VertexSet& s : candidates) {
        if (auto c = try_certify(g_, s, x_)) {
          return finish(*c, TerminalCase::BrickCase, to_string(b.type) + " wheel");
        }
      }
    }
    return std::nullopt;
  }

  std::size_t triangle_with(VertexId a, std::optional<VertexId> b = std::nullopt) const {
    for (std::size_t i : incident_.at(a)) {
      const Brick& br = bricks_[i];
      if (!is_triangular(br.type)) continue;
      if (!b || std::find(br.attachments.begin(), br.attachments.end(), *b) != br.attachments.end()) return i;
    }
    throw InvariantViolation("extract: attachment without its triangular brick");
  }

  static VertexId third(const Brick& t, VertexId a, VertexId b) {
    for (VertexId v : t.attachments) {
      if (v != a && v != b) return v;
    }
    throw InvariantViolation("extract: degenerate triangle");
  }

  Outcome last_small_hyperedge() {
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < bricks_.size(); ++i) {
      if (bricks_[i].attachments.size() <= 2) small.push_back(i);
    }
    if (small.size() != 1) throw InvariantViolation("extract: brick surgeries exhausted");
    const Brick& b = bricks_[small[0]];
    if (!b.inner.count(x_)) throw InvariantViolation("extract: small hyperedge avoids x but gave no wheel");
    const std::int64_t offset = g_.fresh_label().value;
    if (b.attachments.size() == 1) {
      VertexId w = b.attachments[0];
      return reduce(g_, x_, ReductionKind::BrickSurgery, prefix(b) + "two-copy-gluing",
                    glue_two_copies(remove_vertices(g_, b.inner), w, offset), w, unshift(offset, "copy"));
    }
    VertexId u = b.attachments[0], v = b.attachments[1];
    if (g_.has_edge(u, v)) {
      VertexId w = third(bricks_[triangle_with(u, v)], u, v);
      return reduce(g_, x_, ReductionKind::BrickSurgery, prefix(b) + "two-copy-gluing-adjacent",
                    glue_two_copies(remove_vertices(g_, b.vertex_set()), w, offset), w, unshift(offset, "copy"));
    }
    const Brick& f = bricks_[triangle_with(u)];
    const Brick& gb = bricks_[triangle_with(v)];
    VertexSet common;
    for (VertexId a : f.attachments) {
      if (std::find(gb.attachments.begin(), gb.attachments.end(), a) != gb.attachments.end()) common.insert(a);
    }
    if (common.empty()) return contract_brick(b, "contract-2-hyperedge");
    if (common.size() != 1) throw InvariantViolation("extract: triangles at a 2-hyperedge share an edge");
    VertexId w = *common.begin();
    VertexId up = third(f, u, w), vp = third(gb, v, w);
    if (up == vp) throw InvariantViolation("extract: K4 gadget ends coincide");
    VertexId a(offset), bb(offset + 1), c(offset + 2), d(offset + 3);
    VertexSet drop = b.vertex_set();
    drop.insert(w);
    Graph child = remove_vertices(g_, drop);
    const std::array<VertexId, 4> gadget{a, bb, c, d};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) child.add_edge(gadget[i], gadget[j]);
    }
    child.add_edge(a, up);
    child.add_edge(bb, up);
    child.add_edge(c, vp);
    child.add_edge(d, vp);
    Lifter lift = [gadget, w, up, vp](const Graph& parent, VertexId px, const Graph& ch,
                                      const SubdivisionCertificate& h) {
      VertexSet s = h.vertex_set();
      bool touches = std::any_of(gadget.begin(), gadget.end(), [&](VertexId g) { return s.count(g); });
      if (!touches) return std::make_pair(certify(parent, s, px, "K4 gadget"), std::string("avoids gadget"));
      VertexSet q;
      for (VertexId z : {up, vp, gadget[0], gadget[1], gadget[2], gadget[3]}) {
        if (s.count(z)) q.insert(z);
      }
      Graph qg = induced_subgraph(ch, q);
      if (!is_connected(qg) || qg.num_edges() + 1 != q.size() || qg.max_degree() > 2) {
        throw InvariantViolation("extract: certificate meets the K4 gadget in something other than an induced path");
      }
      for (VertexId z : gadget) s.erase(z);
      s.insert(w);
      return std::make_pair(certify(parent, s, px, "K4 gadget"), std::string("gadget path through w"));
    };
    return reduce(g_, x_, ReductionKind::BrickSurgery, prefix(b) + "k4-gadget", std::move(child), a,
                  std::move(lift));
  }
};

Outcome handle_min_degree4(const Graph& g, VertexId x) {
  std::set<Edge> br = bridges(g);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) > 4 && g.degree(e.v) > 4 && !br.count(e)) return delete_step(g, x, e);
  }
  for (const Edge& e : g.edges()) {
    if (!is_critical(g, e)) return contract_step(g, x, e);
  }
  if (auto sq = is_square_of_cycle(g)) {
    return finish(square_of_cycle_certificate(g, *sq, x), TerminalCase::SquareOfCycle,
                  "C" + std::to_string(sq->length) + "^2");
  }
  Decomposition d = decompose(g);
  if (auto* sq = std::get_if<SquareOfCycle>(&d)) {
    SquareOrder order{static_cast<int>(sq->order.size()), sq->order};
    return finish(square_of_cycle_certificate(g, order, x), TerminalCase::SquareOfCycle, "C^2 by decomposition");
  }
  return BrickSurgery(g, x, std::get<BrickDecomposition>(d)).run();
}

}  // namespace

Extraction extract_4connected(const Graph& g, VertexId x) {
  if (!g.has_vertex(x)) throw DomainError("extract_4connected: x is not a vertex of G");
  if (!is_k_connected(g, 4)) throw DomainError("extract_4connected: G is not 4-connected");
  return drive(g, x, handle_4connected, [](const Graph& h) { return is_k_connected(h, 4); }, "extract_4connected");
}

Extraction extract_min_degree4(const Graph& g, VertexId x) {
  if (!g.has_vertex(x)) throw DomainError("extract_min_degree4: x is not a vertex of G");
  if (!in_class_c(g)) throw DomainError("extract_min_degree4: G must be connected with minimum degree at least 4");
  return drive(g, x, handle_min_degree4, in_class_c, "extract_min_degree4");
}

Extraction extract(const Graph& g, VertexId x, ExtractMode mode) {
  return mode == ExtractMode::FourConnected ? extract_4connected(g, x) : extract_min_degree4(g, x);
}

SubdivisionCertificate shrink_for_spanning_k4(const Graph& g, const SubdivisionCertificate& cert) {
  if (cert.pattern.kind == PatternKind::Theta) throw DomainError("shrink_for_spanning_k4: theta certificate");
  if (admits_spanning_k4(cert)) return cert;
  VertexSet s = cert.vertex_set();
  auto drop_interior = [&](std::size_t path) {
    const auto& p = cert.paths[path];
    for (std::size_t i = 1; i + 1 < p.size(); ++i) s.erase(p[i]);
  };
  if (cert.pattern.kind == PatternKind::Wheel) {
    int kept = 0;
    for (int i = 0; i < cert.pattern.rim; ++i) {
      if (cert.paths[i].size() <= 2) continue;
      if (kept < 3) {
        kept++;
      } else {
        drop_interior(i);
      }
    }
  } else {
    drop_interior(0);
  }
  auto c = recognize_induced_subdivision(g, s, PatternSet::theorem());
  if (!c || !admits_spanning_k4(*c)) throw InvariantViolation("shrink_for_spanning_k4: shrunk set is not admissible");
  return *c;
}

K4Extraction extract_k4(const Graph& g, VertexId x, ExtractMode mode) {
  Extraction e = extract(g, x, mode);
  K4Extraction out;
  out.original = e.cert;
  out.trace = std::move(e.trace);
  out.certificate = shrink_for_spanning_k4(g, out.original);
  if (!verify_certificate(g, out.certificate, x).ok()) throw InvariantViolation("extract_k4: shrunk certificate fails");
  out.k4 = spanning_k4_subdivision(out.certificate);
  if (!verify_k4_subgraph(g, out.k4, x).ok()) throw InvariantViolation("extract_k4: K4 subdivision fails");
  return out;
}

}  // namespace nonsep
