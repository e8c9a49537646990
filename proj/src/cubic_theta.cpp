#include "nonsep/cubic_theta.hpp"

#include <algorithm>
#include <optional>

namespace nonsep {

std::string to_string(CubicReductionKind kind) {
  switch (kind) {
    case CubicReductionKind::BridgeSplit: return "BridgeSplit";
    case CubicReductionKind::K4minusExcision: return "K4minusExcision";
    case CubicReductionKind::TriangleContraction: return "TriangleContraction";
    case CubicReductionKind::VertexPairExcision: return "VertexPairExcision";
  }
  return "";
}

namespace {

enum class LiftKind { Identity, InsertBetween, Uncontract };

struct Frame {
  Graph parent;
  VertexId parent_x;
  LiftKind lift = LiftKind::Identity;
  VertexId a, p, q;  // InsertBetween puts a between p and q; Uncontract replaces a by p, q
  std::optional<VertexId> forbidden;
  std::vector<Edge> added;
  std::optional<Edge> usable;  // an added edge the lift knows how to undo
};

struct Step {
  std::optional<VertexSet> terminal;
  std::optional<Frame> frame;
  Graph child;
  VertexId child_x;
  std::optional<CubicReduction> reduction;
};

void check_cubic(const Graph& g, VertexId x) {
  if (!g.has_vertex(x)) throw DomainError("find_theta: x is not a vertex of G");
  if (!is_connected(g)) throw DomainError("find_theta: G is not connected");
  if (g.min_degree() != 3 || g.max_degree() != 3) throw DomainError("find_theta: G is not cubic");
  if (g.num_vertices() == 4) throw DomainError("find_theta: G is K4");
}

VertexId other_neighbor(const Graph& g, VertexId v, const VertexSet& avoid) {
  for (VertexId w : g.neighbors(v)) {
    if (!avoid.count(w)) return w;
  }
  throw InvariantViolation("find_theta: expected neighbour missing");
}

/// Lexicographically least 4-set containing x that spans at least five edges.
std::optional<VertexSet> k4minus_containing(const Graph& g, VertexId x) {
  VertexSet around;
  for (VertexId w : g.neighbors(x)) {
    around.insert(w);
    for (VertexId z : g.neighbors(w)) around.insert(z);
  }
  around.erase(x);
  std::vector<VertexId> c(around.begin(), around.end());
  std::optional<VertexSet> best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        VertexSet s{x, c[i], c[j], c[k]};
        if (induced_subgraph(g, s).num_edges() >= 5 && (!best || s < *best)) best = s;
      }
    }
  }
  return best;
}

Graph with_edges(Graph h, const std::vector<Edge>& add) {
  for (const Edge& e : add) h.add_edge(e.u, e.v);
  return h;
}

CubicReduction record(CubicReductionKind kind, const Graph& g, VertexSet removed, std::vector<Edge> added,
                      const Graph& child, VertexId child_x) {
  return {kind, std::move(removed), std::move(added), g.num_vertices(), child.num_vertices(), child_x};
}

Step contract_triangle(const Graph& g, const VertexSet& tri, VertexId parent_x, VertexId child_x_if_kept,
                       bool child_avoids_merged) {
  VertexId v = g.fresh_label();
  Graph h = remove_vertices(g, tri);
  std::vector<Edge> added;
  for (VertexId t : tri) {
    VertexId out = other_neighbor(g, t, tri);
    added.emplace_back(v, out);
  }
  h = with_edges(std::move(h), added);
  Step st;
  Frame f;
  f.parent = g;
  f.parent_x = parent_x;
  f.added = added;
  if (child_avoids_merged) {
    f.forbidden = v;
    st.child_x = v;
  } else {
    f.lift = LiftKind::Uncontract;
    f.a = v;
    std::vector<VertexId> rest;
    for (VertexId t : tri) {
      if (t != child_x_if_kept) rest.push_back(t);
    }
    f.p = rest[0];
    f.q = rest[1];
    st.child_x = parent_x;
  }
  st.reduction = record(CubicReductionKind::TriangleContraction, g, tri, added, h, st.child_x);
  st.child = std::move(h);
  st.frame = std::move(f);
  return st;
}

Step reduce(const Graph& g, VertexId x) {
  Step st;
  if (auto k = k4minus_containing(g, x)) {
    VertexSet outside;
    for (VertexId v : *k) {
      for (VertexId w : g.neighbors(v)) {
        if (!k->count(w)) outside.insert(w);
      }
    }
    Frame f;
    f.parent = g;
    f.parent_x = x;
    if (outside.size() == 1) {
      VertexId a = *outside.begin();
      VertexId b = other_neighbor(g, a, *k);
      std::vector<VertexId> yz, pq;
      for (VertexId w : g.neighbors(a)) {
        if (k->count(w)) yz.push_back(w);
      }
      for (VertexId w : g.neighbors(b)) {
        if (w != a) pq.push_back(w);
      }
      std::vector<Edge> added{Edge(yz[0], pq[0]), Edge(yz[1], pq[1])};
      st.child = with_edges(remove_vertices(g, {a, b}), added);
      st.child_x = yz[0];
      f.added = added;
      st.reduction = record(CubicReductionKind::BridgeSplit, g, {a, b}, added, st.child, st.child_x);
      st.frame = std::move(f);
      return st;
    }
    if (outside.size() != 2) throw InvariantViolation("find_theta: K4- with unexpected boundary");
    VertexId a = *outside.begin(), b = *outside.rbegin();
    if (!g.has_edge(a, b)) {
      std::vector<Edge> added{Edge(a, b)};
      Graph h = with_edges(remove_vertices(g, *k), added);
      if (h.num_vertices() == 4) {
        st.terminal = remove_vertices(g, *k).vertex_set();
        return st;
      }
      st.child = std::move(h);
      st.child_x = a;
      f.added = added;
      st.reduction = record(CubicReductionKind::K4minusExcision, g, *k, added, st.child, st.child_x);
      st.frame = std::move(f);
      return st;
    }
    auto split = [&](VertexId u, VertexId partner, VertexId& inside, VertexId& out) {
      for (VertexId w : g.neighbors(u)) {
        if (k->count(w)) {
          inside = w;
        } else if (w != partner) {
          out = w;
        }
      }
    };
    VertexId y, p, z, q;
    split(a, b, y, p);
    split(b, a, z, q);
    std::vector<Edge> added{Edge(y, p), Edge(z, q)};
    st.child = with_edges(remove_vertices(g, {a, b}), added);
    st.child_x = y;
    f.added = added;
    st.reduction = record(CubicReductionKind::VertexPairExcision, g, {a, b}, added, st.child, st.child_x);
    st.frame = std::move(f);
    return st;
  }

  const auto& nx = g.neighbors(x);
  for (std::size_t i = 0; i < nx.size(); ++i) {
    for (std::size_t j = i + 1; j < nx.size(); ++j) {
      if (g.has_edge(nx[i], nx[j])) return contract_triangle(g, {x, nx[i], nx[j]}, x, x, true);
    }
  }

  VertexId a = nx[0], b = nx[1], c = nx[2];
  std::vector<VertexId> pq;
  for (VertexId w : g.neighbors(a)) {
    if (w != x) pq.push_back(w);
  }
  VertexId p = pq[0], q = pq[1];
  if (!g.has_edge(p, q)) {
    std::vector<Edge> added{Edge(b, c), Edge(p, q)};
    Graph h = with_edges(remove_vertices(g, {x, a}), added);
    VertexSet comp;
    for (const VertexSet& cs : components(h)) {
      if (cs.count(b)) comp = cs;
    }
    Graph ch = induced_subgraph(h, comp);
    if (ch.num_vertices() == 4) {
      st.terminal = comp;
      return st;
    }
    Frame f;
    f.parent = g;
    f.parent_x = x;
    f.lift = LiftKind::InsertBetween;
    f.a = a;
    f.p = p;
    f.q = q;
    f.added = added;
    f.usable = Edge(p, q);
    st.child = std::move(ch);
    st.child_x = b;
    st.reduction = record(CubicReductionKind::VertexPairExcision, g, {x, a}, added, st.child, st.child_x);
    st.frame = std::move(f);
    return st;
  }
  VertexId p_out = other_neighbor(g, p, {a, q});
  VertexId q_out = other_neighbor(g, q, {a, p});
  if (p_out != q_out) return contract_triangle(g, {a, p, q}, x, a, false);

  VertexId d = p_out;
  VertexSet k{a, p, q, d};
  if (is_connected_without(g, k)) {
    st.terminal = k;
    return st;
  }
  VertexId y = other_neighbor(g, d, {p, q});
  std::vector<Edge> added{Edge(x, y)};
  st.child = with_edges(remove_vertices(g, k), added);
  st.child_x = x;
  Frame f;
  f.parent = g;
  f.parent_x = x;
  f.added = added;
  st.reduction = record(CubicReductionKind::K4minusExcision, g, k, added, st.child, st.child_x);
  st.frame = std::move(f);
  return st;
}

SubdivisionCertificate certify(const Graph& g, const VertexSet& s, VertexId x, const char* where) {
  auto c = recognize_induced_subdivision(g, s, PatternSet::theta_only());
  if (!c || !verify_certificate(g, *c, x).ok()) {
    throw InvariantViolation(std::string("find_theta: lifted set is not a nonseparating theta (") + where + ")");
  }
  return *c;
}

}  // namespace

SubdivisionCertificate base_case(const Graph& g, VertexId x) {
  check_cubic(g, x);
  if (g.num_vertices() != 6) throw DomainError("base_case: G must have 6 vertices");
  VertexSet s = g.vertex_set();
  s.erase(x);
  return certify(g, s, x, "base case");
}

ThetaSearch find_theta_traced(const Graph& g, VertexId x) {
  check_cubic(g, x);
  ThetaSearch out;
  std::vector<Frame> stack;
  Graph cur = g;
  VertexId cx = x;
  VertexSet s;
  while (true) {
    if (cur.num_vertices() == 6) {
      s = cur.vertex_set();
      s.erase(cx);
      break;
    }
    Step st = reduce(cur, cx);
    if (st.terminal) {
      s = *st.terminal;
      break;
    }
    out.reductions.push_back(*st.reduction);
    stack.push_back(std::move(*st.frame));
    cur = std::move(st.child);
    cx = st.child_x;
  }
  certify(cur, s, cx, "innermost");
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (const Edge& e : f.added) {
      if (f.lift == LiftKind::Uncontract && e.contains(f.a)) continue;
      if (s.count(e.u) && s.count(e.v) && (!f.usable || *f.usable != e)) {
        throw InvariantViolation("find_theta: lifted theta uses an added edge");
      }
    }
    if (f.forbidden && s.count(*f.forbidden)) {
      throw InvariantViolation("find_theta: theta contains the contracted vertex");
    }
    if (f.lift == LiftKind::InsertBetween && s.count(f.p) && s.count(f.q)) {
      s.insert(f.a);
    } else if (f.lift == LiftKind::Uncontract && s.count(f.a)) {
      s.erase(f.a);
      s.insert(f.p);
      s.insert(f.q);
    }
    certify(f.parent, s, f.parent_x, "lift");
  }
  out.theta = certify(g, s, x, "result");
  return out;
}

SubdivisionCertificate find_theta(const Graph& g, VertexId x) { return find_theta_traced(g, x).theta; }

}  // namespace nonsep
