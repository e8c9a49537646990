#include "nonsep/subdivision.hpp"

#include <algorithm>
#include <map>

namespace nonsep {

PatternType PatternType::wheel(int l) {
  if (l < 3) throw DomainError("wheel pattern needs at least 3 rim vertices");
  return {PatternKind::Wheel, l};
}

int PatternType::vertex_count() const {
  switch (kind) {
    case PatternKind::Wheel: return rim + 1;
    case PatternKind::Prism:
    case PatternKind::K33: return 6;
    case PatternKind::Theta: return 2;
  }
  return 0;
}

std::vector<std::pair<int, int>> PatternType::edges() const {
  std::vector<std::pair<int, int>> e;
  switch (kind) {
    case PatternKind::Wheel:
      for (int i = 1; i <= rim; ++i) e.emplace_back(0, i);
      for (int i = 1; i <= rim; ++i) e.emplace_back(i, i % rim + 1);
      break;
    case PatternKind::Prism:
      e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
      break;
    case PatternKind::K33:
      for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
      }
      break;
    case PatternKind::Theta:
      e = {{0, 1}, {0, 1}, {0, 1}};
      break;
  }
  return e;
}

std::string PatternType::tag() const {
  switch (kind) {
    case PatternKind::Wheel: return "wheel";
    case PatternKind::Prism: return "prism";
    case PatternKind::K33: return "k33";
    case PatternKind::Theta: return "theta";
  }
  return "";
}

std::string PatternType::name() const {
  switch (kind) {
    case PatternKind::Wheel: return rim == 3 ? "K4" : "W" + std::to_string(rim);
    case PatternKind::Prism: return "prism";
    case PatternKind::K33: return "K33";
    case PatternKind::Theta: return "theta";
  }
  return "";
}

bool PatternSet::allows(const PatternType& p) const {
  switch (p.kind) {
    case PatternKind::Wheel: return wheel;
    case PatternKind::Prism: return prism;
    case PatternKind::K33: return k33;
    case PatternKind::Theta: return theta;
  }
  return false;
}

VertexSet SubdivisionCertificate::vertex_set() const {
  VertexSet s(branch.begin(), branch.end());
  for (const auto& p : paths) s.insert(p.begin(), p.end());
  return s;
}

std::vector<Edge> SubdivisionCertificate::edge_list() const {
  std::set<Edge> e;
  for (const auto& p : paths) {
    for (std::size_t i = 1; i < p.size(); ++i) e.insert(Edge(p[i - 1], p[i]));
  }
  return {e.begin(), e.end()};
}

std::size_t SubdivisionCertificate::edge_count() const { return edge_list().size(); }

Graph SubdivisionCertificate::as_graph() const {
  Graph h;
  for (VertexId b : branch) h.add_vertex(b);
  for (const Edge& e : edge_list()) h.add_edge(e.u, e.v);
  return h;
}

Skeleton suppress_degree_two(const Graph& h) {
  Skeleton sk;
  for (VertexId v : h.vertices()) {
    std::size_t d = h.degree(v);
    if (d < 2) throw NotASubdivision("vertex " + std::to_string(v.value) + " has degree below 2");
    if (d >= 3) sk.branch.push_back(v);
  }
  std::set<std::pair<VertexId, VertexId>> used;
  VertexSet seen(sk.branch.begin(), sk.branch.end());
  for (VertexId a : sk.branch) {
    for (VertexId w : h.neighbors(a)) {
      if (used.count({a, w})) continue;
      std::vector<VertexId> path{a};
      VertexId prev = a, cur = w;
      while (h.degree(cur) == 2) {
        path.push_back(cur);
        seen.insert(cur);
        const auto& nb = h.neighbors(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      used.insert({a, w});
      used.insert({cur, prev});
      sk.links.push_back({a, cur, std::move(path)});
    }
  }
  if (seen.size() != h.num_vertices()) throw NotASubdivision("graph has a cycle component");
  return sk;
}

namespace {

std::optional<SubdivisionCertificate> assemble(const PatternType& p, std::vector<VertexId> branch,
                                               const Skeleton& sk) {
  std::map<Edge, const Skeleton::Link*> by_pair;
  for (const auto& link : sk.links) by_pair[Edge(link.a, link.b)] = &link;
  SubdivisionCertificate c{p, std::move(branch), {}};
  for (auto [i, j] : p.edges()) {
    auto it = by_pair.find(Edge(c.branch[i], c.branch[j]));
    if (it == by_pair.end()) return std::nullopt;
    std::vector<VertexId> path = it->second->path;
    if (path.front() != c.branch[i]) std::reverse(path.begin(), path.end());
    c.paths.push_back(std::move(path));
  }
  return c;
}

std::optional<SubdivisionCertificate> as_wheel(const Graph& k, const Skeleton& sk) {
  const int n = static_cast<int>(k.num_vertices());
  if (n < 4) return std::nullopt;
  std::vector<VertexId> branch;
  if (n == 4) {
    for (VertexId v : k.vertices()) {
      if (k.degree(v) != 3) return std::nullopt;
    }
    branch = k.vertices();
    return assemble(PatternType::wheel(3), branch, sk);
  }
  std::optional<VertexId> center;
  for (VertexId v : k.vertices()) {
    if (static_cast<int>(k.degree(v)) == n - 1) {
      if (center) return std::nullopt;
      center = v;
    } else if (k.degree(v) != 3) {
      return std::nullopt;
    }
  }
  if (!center) return std::nullopt;
  Graph rim = k;
  rim.remove_vertex(*center);
  if (!is_connected(rim) || rim.max_degree() != 2 || rim.min_degree() != 2) return std::nullopt;
  branch.push_back(*center);
  VertexId start = rim.vertices().front();
  VertexId prev = start, cur = rim.neighbors(start).front();
  branch.push_back(start);
  while (cur != start) {
    branch.push_back(cur);
    const auto& nb = rim.neighbors(cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return assemble(PatternType::wheel(n - 1), branch, sk);
}

std::optional<std::vector<int>> two_colouring(const Graph& k, const std::vector<VertexId>& order) {
  std::map<VertexId, int> colour;
  for (VertexId s : order) {
    if (colour.count(s)) continue;
    colour[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : k.neighbors(v)) {
        auto it = colour.find(w);
        if (it == colour.end()) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (it->second == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<int> out;
  for (VertexId v : order) out.push_back(colour[v]);
  return out;
}

std::optional<SubdivisionCertificate> as_cubic6(const Graph& k, const Skeleton& sk, PatternSet allowed) {
  if (k.num_vertices() != 6 || k.num_edges() != 9) return std::nullopt;
  std::vector<VertexId> vs = k.vertices();
  for (VertexId v : vs) {
    if (k.degree(v) != 3) return std::nullopt;
  }
  if (auto col = two_colouring(k, vs)) {
    if (!allowed.k33) return std::nullopt;
    std::vector<VertexId> branch;
    for (int side : {(*col)[0], 1 - (*col)[0]}) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if ((*col)[i] == side) branch.push_back(vs[i]);
      }
    }
    if (branch.size() != 6) return std::nullopt;
    return assemble(PatternType::k33(), branch, sk);
  }
  if (!allowed.prism) return std::nullopt;
  VertexId a0 = vs.front();
  const auto& nb = k.neighbors(a0);
  std::vector<VertexId> tri{a0};
  for (std::size_t i = 0; i < nb.size() && tri.size() == 1; ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (k.has_edge(nb[i], nb[j])) {
        tri = {a0, nb[i], nb[j]};
        break;
      }
    }
  }
  if (tri.size() != 3) return std::nullopt;
  std::vector<VertexId> branch = tri;
  VertexSet in_tri(tri.begin(), tri.end());
  for (VertexId t : tri) {
    for (VertexId w : k.neighbors(t)) {
      if (!in_tri.count(w)) {
        branch.push_back(w);
        break;
      }
    }
  }
  if (VertexSet(branch.begin(), branch.end()).size() != 6) return std::nullopt;
  return assemble(PatternType::prism(), branch, sk);
}

}  // namespace

std::optional<SubdivisionCertificate> recognize_subdivision(const Graph& h, PatternSet allowed) {
  if (!is_connected(h)) return std::nullopt;
  Skeleton sk;
  try {
    sk = suppress_degree_two(h);
  } catch (const NotASubdivision&) {
    return std::nullopt;
  }
  for (const auto& link : sk.links) {
    if (link.a == link.b) return std::nullopt;
  }
  if (sk.branch.size() == 2 && sk.links.size() == 3) {
    if (!allowed.theta) return std::nullopt;
    SubdivisionCertificate c{PatternType::theta(), sk.branch, {}};
    for (const auto& link : sk.links) {
      std::vector<VertexId> path = link.path;
      if (path.front() != c.branch[0]) std::reverse(path.begin(), path.end());
      c.paths.push_back(std::move(path));
    }
    std::sort(c.paths.begin(), c.paths.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return c;
  }
  Graph k;
  for (VertexId b : sk.branch) k.add_vertex(b);
  for (const auto& link : sk.links) {
    if (k.has_edge(link.a, link.b)) return std::nullopt;
    k.add_edge(link.a, link.b);
  }
  if (allowed.wheel) {
    if (auto c = as_wheel(k, sk)) return c;
  }
  if (allowed.prism || allowed.k33) {
    if (auto c = as_cubic6(k, sk, allowed)) return c;
  }
  return std::nullopt;
}

std::optional<SubdivisionCertificate> recognize_induced_subdivision(const Graph& g, const VertexSet& s,
                                                                    PatternSet allowed) {
  return recognize_subdivision(induced_subgraph(g, s), allowed);
}

bool certificate_well_formed(const Graph& g, const SubdivisionCertificate& cert,
                             std::optional<Witness>* witness) {
  auto fail = [&](std::string kind, std::vector<VertexId> vs) {
    if (witness) *witness = Witness{std::move(kind), std::move(vs)};
    return false;
  };
  const auto pedges = cert.pattern.edges();
  if (cert.pattern.kind == PatternKind::Wheel && cert.pattern.rim < 3) return fail("vertex", {});
  if (static_cast<int>(cert.branch.size()) != cert.pattern.vertex_count()) return fail("vertex", cert.branch);
  if (cert.paths.size() != pedges.size()) return fail("path", {});
  VertexSet branch_set;
  for (VertexId b : cert.branch) {
    if (!g.has_vertex(b) || !branch_set.insert(b).second) return fail("vertex", {b});
  }
  VertexSet interiors;
  int short_paths = 0;
  for (std::size_t k = 0; k < pedges.size(); ++k) {
    const auto& p = cert.paths[k];
    if (p.size() < 2 || p.front() != cert.branch[pedges[k].first] ||
        p.back() != cert.branch[pedges[k].second]) {
      return fail("path", p);
    }
    if (p.size() == 2) short_paths++;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!g.has_vertex(p[i])) return fail("vertex", {p[i]});
      if (i > 0 && !g.has_edge(p[i - 1], p[i])) return fail("path", {p[i - 1], p[i]});
      if (i == 0 || i + 1 == p.size()) continue;
      if (branch_set.count(p[i]) || !interiors.insert(p[i]).second) return fail("vertex", {p[i]});
    }
  }
  if (cert.pattern.kind == PatternKind::Theta && short_paths > 1) return fail("path", cert.branch);
  return true;
}

VerificationReport verify_certificate(const Graph& g, const SubdivisionCertificate& cert,
                                      std::optional<VertexId> x, VerifyOptions opts) {
  VerificationReport r;
  std::optional<Witness> pattern_witness;
  r.pattern_ok = certificate_well_formed(g, cert, &pattern_witness);
  if (r.pattern_ok && opts.theta_without_short_path && cert.pattern.kind == PatternKind::Theta) {
    for (const auto& p : cert.paths) {
      if (p.size() == 2) {
        r.pattern_ok = false;
        pattern_witness = Witness{"path", p};
        break;
      }
    }
  }

  const VertexSet vs = cert.vertex_set();
  std::optional<Witness> chord;
  bool inside = std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return g.has_vertex(v); });
  if (inside) {
    const auto own = cert.edge_list();
    const std::set<Edge> own_set(own.begin(), own.end());
    for (VertexId v : vs) {
      for (VertexId w : g.neighbors(v)) {
        if (v < w && vs.count(w) && !own_set.count(Edge(v, w))) {
          chord = Witness{"chord", {v, w}};
          break;
        }
      }
      if (chord) break;
    }
    r.induced = !chord;
  }

  std::optional<Witness> split;
  Graph rest = remove_vertices(g, vs);
  auto comps = components(rest);
  r.nonseparating = comps.size() == 1;
  if (comps.size() > 1) {
    auto smallest = std::min_element(comps.begin(), comps.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    split = Witness{"component", {smallest->begin(), smallest->end()}};
  } else if (comps.empty()) {
    split = Witness{"component", {}};
  }

  r.avoids_x = !x || !vs.count(*x);

  if (!r.pattern_ok) {
    r.witness = pattern_witness;
  } else if (!r.induced) {
    r.witness = chord ? chord : Witness{"vertex", {}};
  } else if (!r.nonseparating) {
    r.witness = split;
  } else if (!r.avoids_x) {
    r.witness = Witness{"vertex", {*x}};
  }
  return r;
}

int pattern_edge_index(const PatternType& p, int i, int j) {
  const auto e = p.edges();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if ((e[k].first == i && e[k].second == j) || (e[k].first == j && e[k].second == i)) {
      return static_cast<int>(k);
    }
  }
  return -1;
}

std::vector<VertexId> oriented_path(const SubdivisionCertificate& cert, int i, int j) {
  int k = pattern_edge_index(cert.pattern, i, j);
  if (k < 0) throw DomainError("oriented_path: not a pattern edge");
  std::vector<VertexId> p = cert.paths[k];
  if (p.front() != cert.branch[i]) std::reverse(p.begin(), p.end());
  return p;
}

std::optional<PathLocation> locate(const SubdivisionCertificate& cert, VertexId w) {
  for (std::size_t i = 0; i < cert.branch.size(); ++i) {
    if (cert.branch[i] == w) return PathLocation{static_cast<int>(i), -1, -1};
  }
  for (std::size_t k = 0; k < cert.paths.size(); ++k) {
    const auto& p = cert.paths[k];
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] == w) return PathLocation{-1, static_cast<int>(k), static_cast<int>(i)};
    }
  }
  return std::nullopt;
}

int path_target(const SubdivisionCertificate& cert, int from, VertexId w) {
  const auto e = cert.pattern.edges();
  for (std::size_t k = 0; k < e.size(); ++k) {
    const auto& p = cert.paths[k];
    if (e[k].first == from && p[1] == w) return e[k].second;
    if (e[k].second == from && p[p.size() - 2] == w) return e[k].first;
  }
  throw DomainError("path_target: vertex is not next to the branch vertex");
}

VertexId first_step(const SubdivisionCertificate& cert, int i, int j) {
  return oriented_path(cert, i, j)[1];
}

VertexSet open_path(const SubdivisionCertificate& cert, int i, int j) {
  auto p = oriented_path(cert, i, j);
  return VertexSet(p.begin() + 1, p.end() - 1);
}

VertexSet half_open_path(const SubdivisionCertificate& cert, int i, int j) {
  auto p = oriented_path(cert, i, j);
  return VertexSet(p.begin() + 1, p.end());
}

namespace {

/// Pattern edges to drop so that the rest is a K4 subdivision, or nullopt.
std::optional<std::vector<int>> k4_drop_set(const SubdivisionCertificate& cert) {
  const auto& pat = cert.pattern;
  auto is_short = [&](int k) { return cert.paths[k].size() == 2; };
  switch (pat.kind) {
    case PatternKind::Wheel: {
      std::vector<int> keep, optional_spokes;
      for (int i = 0; i < pat.rim; ++i) (is_short(i) ? optional_spokes : keep).push_back(i);
      if (keep.size() > 3) return std::nullopt;
      std::vector<int> drop;
      for (int s : optional_spokes) {
        if (keep.size() < 3) {
          keep.push_back(s);
        } else {
          drop.push_back(s);
        }
      }
      return drop;
    }
    case PatternKind::Prism:
      for (int k = 0; k < 6; ++k) {
        if (is_short(k)) return std::vector<int>{k};
      }
      return std::nullopt;
    case PatternKind::K33:
      for (int k = 0; k < 9; ++k) {
        if (is_short(k)) return std::vector<int>{k};
      }
      return std::nullopt;
    case PatternKind::Theta:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool admits_spanning_k4(const SubdivisionCertificate& cert) { return k4_drop_set(cert).has_value(); }

SubdivisionCertificate spanning_k4_subdivision(const SubdivisionCertificate& cert) {
  auto drop = k4_drop_set(cert);
  if (!drop) throw DomainError("certificate has no spanning K4 subdivision");
  if (cert.pattern == PatternType::k4()) return cert;
  Graph h = cert.as_graph();
  for (int k : *drop) h.remove_edge(cert.paths[k][0], cert.paths[k][1]);
  PatternSet wheels{true, false, false, false};
  auto k4 = recognize_subdivision(h, wheels);
  if (!k4 || k4->pattern != PatternType::k4()) {
    throw InvariantViolation("spanning_k4_subdivision: reduced graph is not a K4 subdivision");
  }
  return *k4;
}

K4Report verify_k4_subgraph(const Graph& g, const SubdivisionCertificate& k4, VertexId x) {
  K4Report r;
  r.is_k4_subdivision = k4.pattern == PatternType::k4() && certificate_well_formed(g, k4);
  const VertexSet vs = k4.vertex_set();
  r.nonseparating = is_connected_without(g, vs);
  r.avoids_x = !vs.count(x);
  return r;
}

}  // namespace nonsep
