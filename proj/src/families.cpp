#include "nonsep/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace nonsep {

Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(VertexId(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(VertexId(i), VertexId(j));
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(VertexId(i));
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) g.add_edge(VertexId(i), VertexId(j));
  }
  return g;
}

Graph octahedron() {
  Graph g = complete_graph(6);
  for (int i = 0; i < 3; ++i) g.remove_edge(VertexId(i), VertexId(i + 3));
  return g;
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw DomainError("wheel_graph: rim must have at least 3 vertices");
  Graph g;
  for (int i = 1; i <= rim; ++i) {
    g.add_edge(VertexId(0), VertexId(i));
    g.add_edge(VertexId(i), VertexId(i % rim + 1));
  }
  return g;
}

Graph prism_graph() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube_graph() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
    }
  }
  return Graph::from_edges(8, e);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

Graph heawood_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
  return Graph::from_edges(14, e);
}

Graph mobius_kantor_graph() {
  // Generalized Petersen graph GP(8,3).
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i) {
    e.emplace_back(i, (i + 1) % 8);
    e.emplace_back(i, i + 8);
    e.emplace_back(i + 8, (i + 3) % 8 + 8);
  }
  return Graph::from_edges(16, e);
}

Graph icosahedron_graph() {
  // Two poles 0 and 11, upper pentagon 1..5, lower pentagon 6..10.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up_next = 1 + (i + 1) % 5;
    int low = 6 + i, low_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(11, low);
    e.emplace_back(up, up_next);
    e.emplace_back(low, low_next);
    e.emplace_back(up, low);
    e.emplace_back(up_next, low);
  }
  return Graph::from_edges(12, e);
}

Graph wheels_family(int k, int l) {
  if (k < 1 || l < 3) throw DomainError("wheels_family: need k >= 1 and l >= 3");
  Graph g;
  const int hub_x = k * l;
  const int hub_y = k * l + 1;
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < l; ++i) {
      VertexId v(c * l + i);
      g.add_edge(v, VertexId(c * l + (i + 1) % l));
      g.add_edge(v, VertexId(hub_x));
      g.add_edge(v, VertexId(hub_y));
    }
  }
  g.add_edge(VertexId(hub_x), VertexId(hub_y));
  return g;
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2) return {};
  std::vector<Graph> reps;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> remaining(n, 3);

  auto record = [&]() {
    Graph g;
    for (int v = 0; v < n; ++v) {
      for (int w : adj[v]) {
        if (v < w) g.add_edge(VertexId(v), VertexId(w));
      }
    }
    if (!is_connected(g)) return;
    for (const Graph& r : reps) {
      if (are_isomorphic(r, g)) return;
    }
    reps.push_back(std::move(g));
  };

  // Vertices are saturated in increasing order; the current vertex takes new
  // neighbours in increasing order, and among untouched vertices only the
  // smallest may be chosen (they are interchangeable).
  std::function<void(int, int)> extend = [&](int v, int lower) {
    while (v < n && remaining[v] == 0) {
      v++;
      lower = v;
    }
    if (v == n) {
      record();
      return;
    }
    bool fresh_tried = false;
    for (int w = std::max(lower, v) + 1; w < n; ++w) {
      if (remaining[w] == 0) continue;
      if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) continue;
      bool fresh = adj[w].empty();
      if (fresh) {
        if (fresh_tried) continue;
        fresh_tried = true;
      }
      adj[v].push_back(w);
      adj[w].push_back(v);
      --remaining[v];
      --remaining[w];
      extend(v, w);
      ++remaining[v];
      ++remaining[w];
      adj[v].pop_back();
      adj[w].pop_back();
    }
  };
  extend(0, 0);
  return reps;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

Graph random_connected_cubic(std::uint64_t seed, int n) {
  if (n < 4 || n % 2) throw DomainError("random_connected_cubic: n must be even and >= 4");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    rng.shuffle(stubs);
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(VertexId(v));
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      VertexId a(stubs[i]), b(stubs[i + 1]);
      if (a == b || g.has_edge(a, b)) {
        simple = false;
        break;
      }
      g.add_edge(a, b);
    }
    if (simple && is_connected(g)) return g;
  }
  throw InvariantViolation("random_connected_cubic: no simple connected pairing found");
}

namespace {

std::map<VertexId, int> bfs_distances(const Graph& g, VertexId source) {
  std::map<VertexId, int> dist{{source, 0}};
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

Graph random_min_degree4(std::uint64_t seed, int n, int m) {
  if (n < 5) throw DomainError("random_min_degree4: need at least 5 vertices");
  Rng rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(VertexId(v));
  for (int i = 1; i < n; ++i) {
    g.add_edge(VertexId(perm[i]), VertexId(perm[rng.below(static_cast<std::uint64_t>(i))]));
  }
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  const long target = std::min<long>(m, max_edges);
  while (static_cast<long>(g.num_edges()) < target) {
    VertexId a(static_cast<std::int64_t>(rng.below(n)));
    VertexId b(static_cast<std::int64_t>(rng.below(n)));
    if (a != b) g.add_edge(a, b);
  }
  while (g.min_degree() < 4) {
    const std::size_t low = g.min_degree();
    VertexId u;
    for (VertexId v : g.vertices()) {
      if (g.degree(v) == low) {
        u = v;
        break;
      }
    }
    auto dist = bfs_distances(g, u);
    VertexId best;
    bool found = false;
    for (VertexId w : g.vertices()) {
      if (w == u || g.has_edge(u, w)) continue;
      if (!found || g.degree(w) < g.degree(best) ||
          (g.degree(w) == g.degree(best) && dist[w] > dist[best])) {
        best = w;
        found = true;
      }
    }
    if (!found) throw InvariantViolation("random_min_degree4: no repair edge available");
    g.add_edge(u, best);
  }
  return g;
}

}  // namespace nonsep
