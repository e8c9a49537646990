#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

// Named graphs, all on labels 0..n-1.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Octahedron K_{2,2,2}; vertex i is opposite to i+3.
Graph octahedron();
/// W_l: center 0, rim 1..l in cyclic order.
Graph wheel_graph(int rim);
/// K_2 x K_3: triangles {0,1,2}, {3,4,5}, matching i -- i+3.
Graph prism_graph();
Graph cube_graph();
Graph petersen_graph();
Graph heawood_graph();
Graph mobius_kantor_graph();
Graph icosahedron_graph();

/// k disjoint l-cycles plus two adjacent vertices joined to every cycle
/// vertex. Cycle vertices come first; the two hubs are kl and kl+1.
Graph wheels_family(int k, int l);

/// Every connected simple cubic graph on n vertices, one per isomorphism class.
std::vector<Graph> connected_cubic_graphs(int n);

/// Small deterministic RNG wrapper. std::uniform_int_distribution is not
/// specified bit-exactly across standard libraries, so bounded draws are done
/// here to keep generated families identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph random_connected_cubic(std::uint64_t seed, int n);

/// Random connected graph on n vertices with about m edges, then repaired to
/// minimum degree 4 by repeatedly joining a minimum-degree vertex to the
/// farthest nonadjacent vertex of least degree.
Graph random_min_degree4(std::uint64_t seed, int n, int m);

}  // namespace nonsep
