#include "nonsep/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

namespace nonsep {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(VertexId(static_cast<std::int64_t>(i)));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw DomainError("edge endpoint out of range");
    }
    g.add_edge(VertexId(a), VertexId(b));
  }
  return g;
}

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw DomainError("loops are not allowed");
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) throw DomainError("edge absent");
  auto& nu = iu->second;
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) throw DomainError("edge absent");
  nu.erase(it);
  auto& nv = iv->second;
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (VertexId w : it->second) {
    auto& nw = adj_[w];
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  edge_count_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    std::ostringstream os;
    os << "vertex " << v << " not in graph";
    throw DomainError(os.str());
  }
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

VertexSet Graph::vertex_set() const {
  VertexSet out;
  for (const auto& [v, _] : adj_) out.insert(out.end(), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_) {
    for (VertexId w : nbrs) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

VertexId Graph::fresh_label() const {
  if (adj_.empty()) return VertexId(0);
  return VertexId(adj_.rbegin()->first.value + 1);
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [_, nbrs] : adj_) best = std::min(best, nbrs.size());
  return adj_.empty() ? 0 : best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& [_, nbrs] : adj_) best = std::max(best, nbrs.size());
  return best;
}

Contraction contract_edge(const Graph& g, const Edge& e) {
  return contract_edge(g, e, g.fresh_label());
}

Contraction contract_edge(const Graph& g, const Edge& e, VertexId merged) {
  if (!g.has_edge(e)) throw DomainError("contract_edge: edge absent");
  if (g.has_vertex(merged)) throw DomainError("contract_edge: merged label already in use");
  Graph out = g;
  std::vector<VertexId> nbrs;
  for (VertexId w : g.neighbors(e.u)) {
    if (w != e.v) nbrs.push_back(w);
  }
  for (VertexId w : g.neighbors(e.v)) {
    if (w != e.u) nbrs.push_back(w);
  }
  out.remove_vertex(e.u);
  out.remove_vertex(e.v);
  out.add_vertex(merged);
  for (VertexId w : nbrs) out.add_edge(merged, w);
  return {std::move(out), merged, e.u, e.v};
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw DomainError("delete_edge: edge absent");
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph out;
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw DomainError("induced_subgraph: vertex not in graph");
    out.add_vertex(v);
  }
  for (VertexId v : s) {
    for (VertexId w : g.neighbors(v)) {
      if (v < w && s.count(w)) out.add_edge(v, w);
    }
  }
  return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  Graph out;
  for (VertexId v : g.vertices()) {
    if (!s.count(v)) out.add_vertex(v);
  }
  for (const Edge& e : g.edges()) {
    if (!s.count(e.u) && !s.count(e.v)) out.add_edge(e.u, e.v);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    VertexSet comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return !g.empty() && components(g).size() == 1; }

bool is_connected_without(const Graph& g, const VertexSet& s) {
  std::vector<VertexId> rest;
  for (VertexId v : g.vertices()) {
    if (!s.count(v)) rest.push_back(v);
  }
  if (rest.empty()) return false;
  VertexSet seen{rest.front()};
  std::deque<VertexId> queue{rest.front()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!s.count(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == rest.size();
}

namespace {

/// Dense index view used by the flow and lowlink routines.
struct Dense {
  std::vector<VertexId> label;
  std::map<VertexId, int> index;
  std::vector<std::vector<int>> adj;

  explicit Dense(const Graph& g) : label(g.vertices()) {
    for (int i = 0; i < static_cast<int>(label.size()); ++i) index[label[i]] = i;
    adj.resize(label.size());
    for (int i = 0; i < static_cast<int>(label.size()); ++i) {
      for (VertexId w : g.neighbors(label[i])) adj[i].push_back(index[w]);
    }
  }
};

/// Number of internally disjoint s-t paths, capped at `cap`. s and t must be
/// nonadjacent.
int local_connectivity(const Dense& d, int s, int t, int cap) {
  const int n = static_cast<int>(d.label.size());
  // Node 2v is v_in, 2v+1 is v_out. Arc v_in -> v_out has capacity 1 except
  // for s and t; arc u_out -> v_in has capacity 1 for every edge uv.
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add_arc = [&](int a, int b, int c) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n + 1;
  for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (int v = 0; v < n; ++v) {
    for (int w : d.adj[v]) add_arc(2 * v + 1, 2 * w, 1);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent_arc(2 * n);
  while (flow < cap) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::deque<int> queue{source};
    parent_arc[source] = -2;
    while (!queue.empty() && parent_arc[sink] == -1) {
      int a = queue.front();
      queue.pop_front();
      for (int id : out[a]) {
        if (arcs[id].cap > 0 && parent_arc[arcs[id].to] == -1) {
          parent_arc[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (parent_arc[sink] == -1) break;
    for (int node = sink; node != source;) {
      int id = parent_arc[node];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      node = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::set<Edge> bridges(const Graph& g) {
  Dense d(g);
  const int n = static_cast<int>(d.label.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::set<Edge> out;
  int timer = 0;
  // Iterative DFS carrying (vertex, parent, next neighbour position).
  struct Frame {
    int v;
    int parent;
    std::size_t pos;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.pos < d.adj[f.v].size()) {
        int w = d.adj[f.v][f.pos++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.insert(Edge(d.label[v], d.label[p]));
        }
      }
    }
  }
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) throw DomainError("is_k_connected: k must be positive");
  const int n = static_cast<int>(g.num_vertices());
  if (n <= k) return false;
  if (!is_connected(g)) return false;
  Dense d(g);
  // If a separator X with |X| < k exists, one of the first k vertices lies
  // outside X and is separated from some nonadjacent vertex.
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(d.label[s], d.label[t])) continue;
      if (local_connectivity(d, s, t, k) < k) return false;
    }
  }
  return true;
}

bool is_k_connected_by_separators(const Graph& g, int k) {
  if (k <= 0) throw DomainError("is_k_connected_by_separators: k must be positive");
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n <= k) return false;
  std::vector<int> pick;
  // Enumerate subsets of size 0..k-1 in lexicographic order.
  for (int size = 0; size < k; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      VertexSet sep;
      for (int i : pick) sep.insert(verts[i]);
      if (!is_connected_without(g, sep)) return false;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

LineGraph line_graph(const Graph& y) {
  LineGraph out;
  const auto edges = y.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexId v(static_cast<std::int64_t>(i));
    out.graph.add_vertex(v);
    out.edge_of[v] = edges[i];
    out.vertex_of[edges[i]] = v;
  }
  for (VertexId c : y.vertices()) {
    const auto& nbrs = y.neighbors(c);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        out.graph.add_edge(out.vertex_of.at(Edge(c, nbrs[i])), out.vertex_of.at(Edge(c, nbrs[j])));
      }
    }
  }
  return out;
}

Graph square_of_cycle(int length) {
  if (length < 5) throw DomainError("square_of_cycle: length must be at least 5");
  Graph g;
  for (int i = 0; i < length; ++i) g.add_vertex(VertexId(i));
  for (int i = 0; i < length; ++i) {
    g.add_edge(VertexId(i), VertexId((i + 1) % length));
    g.add_edge(VertexId(i), VertexId((i + 2) % length));
  }
  return g;
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  Dense da(a), db(b);
  const int n = static_cast<int>(da.label.size());
  auto signature = [](const Dense& d, int v) {
    std::vector<std::size_t> s;
    for (int w : d.adj[v]) s.push_back(d.adj[w].size());
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), d.adj[v].size());
    return s;
  };
  std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = signature(da, v);
    sig_b[v] = signature(db, v);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Order a's vertices so each one (after the first of its component) has an
  // already-placed neighbour; that keeps the adjacency checks effective.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int root = 0; root < n; ++root) {
    if (placed[root]) continue;
    std::deque<int> queue{root};
    placed[root] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : da.adj[v]) {
        if (!placed[w]) {
          placed[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<char>> adj_b(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w : db.adj[v]) adj_b[v][w] = 1;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int pos) {
    if (pos == n) return true;
    int v = order[pos];
    for (int c = 0; c < n; ++c) {
      if (used[c] || sig_a[v] != sig_b[c]) continue;
      bool ok = true;
      for (int w : da.adj[v]) {
        if (map[w] != -1 && !adj_b[c][map[w]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Count mapped neighbours on both sides to reject extra adjacencies.
      int mapped_a = 0, mapped_b = 0;
      for (int w : da.adj[v]) mapped_a += map[w] != -1;
      for (int w : db.adj[c]) mapped_b += used[w];
      if (mapped_a != mapped_b) continue;
      map[v] = c;
      used[c] = 1;
      if (extend(pos + 1)) return true;
      map[v] = -1;
      used[c] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (int v = 0; v < n; ++v) out[da.label[v]] = db.label[map[v]];
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& map) {
  auto image = [&](VertexId v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };
  Graph out;
  for (VertexId v : g.vertices()) out.add_vertex(image(v));
  if (out.num_vertices() != g.num_vertices()) throw DomainError("relabel: map is not injective");
  for (const Edge& e : g.edges()) out.add_edge(image(e.u), image(e.v));
  return out;
}

}  // namespace nonsep
