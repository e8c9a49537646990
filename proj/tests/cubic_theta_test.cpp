#include "nonsep/cubic_theta.hpp"

#include <gtest/gtest.h>

#include "nonsep/families.hpp"
#include "nonsep/oracle.hpp"

namespace nonsep {
namespace {

VertexId V(std::int64_t v) { return VertexId(v); }

void expect_valid_theta(const Graph& g, VertexId x, const SubdivisionCertificate& t) {
  EXPECT_EQ(t.pattern, PatternType::theta());
  VerificationReport r = verify_certificate(g, t, x);
  EXPECT_TRUE(r.ok()) << "x = " << x;
}

TEST(FindThetaTest, PrismAndK33DeleteX) {
  for (const Graph& g : {prism_graph(), complete_bipartite(3, 3)}) {
    for (VertexId x : g.vertices()) {
      SubdivisionCertificate t = find_theta(g, x);
      VertexSet expected = g.vertex_set();
      expected.erase(x);
      EXPECT_EQ(t.vertex_set(), expected);
      expect_valid_theta(g, x, t);
      EXPECT_EQ(base_case(g, x), t);
    }
  }
}

TEST(FindThetaTest, PetersenThetaHasNoShortPath) {
  Graph p = petersen_graph();
  for (VertexId x : p.vertices()) {
    SubdivisionCertificate t = find_theta(p, x);
    EXPECT_TRUE(verify_certificate(p, t, x, {true}).ok());
    for (const auto& path : t.paths) EXPECT_GE(path.size(), 3u);
  }
}

TEST(FindThetaTest, ExhaustiveSmallCubic) {
  for (int n : {6, 8, 10}) {
    for (const Graph& g : connected_cubic_graphs(n)) {
      for (VertexId x : g.vertices()) expect_valid_theta(g, x, find_theta(g, x));
    }
  }
}

TEST(FindThetaTest, AgreesWithOracleOnExistence) {
  OracleOptions opts;
  opts.patterns = PatternSet::theta_only();
  for (const Graph& g : connected_cubic_graphs(8)) {
    for (VertexId x : g.vertices()) EXPECT_TRUE(oracle_search(g, x, opts).has_value());
  }
}

TEST(FindThetaTest, NamedGraphs) {
  for (const Graph& g : {cube_graph(), heawood_graph(), mobius_kantor_graph()}) {
    for (VertexId x : g.vertices()) expect_valid_theta(g, x, find_theta(g, x));
  }
}

TEST(FindThetaTest, ReductionsShrinkTheGraph) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_cubic(seed, 40);
    ThetaSearch s = find_theta_traced(g, V(static_cast<std::int64_t>(seed % 40)));
    std::size_t last = g.num_vertices();
    for (const CubicReduction& r : s.reductions) {
      EXPECT_EQ(r.source_vertices, last);
      EXPECT_LT(r.target_vertices, r.source_vertices);
      last = r.target_vertices;
    }
  }
}

TEST(FindThetaTest, LargeRandomCubic) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = random_connected_cubic(100 + seed, 300);
    VertexId x(static_cast<std::int64_t>(seed * 7));
    expect_valid_theta(g, x, find_theta(g, x));
  }
}

TEST(FindThetaTest, GraphsWithManyK4Minus) {
  // Ring of K4- gadgets: every vertex lies in a K4-.
  for (int k : {3, 4, 5, 8}) {
    Graph g;
    for (int i = 0; i < k; ++i) {
      int b = 4 * i;
      g.add_edge(V(b), V(b + 1));
      g.add_edge(V(b), V(b + 2));
      g.add_edge(V(b + 1), V(b + 2));
      g.add_edge(V(b + 1), V(b + 3));
      g.add_edge(V(b + 2), V(b + 3));
      g.add_edge(V(b + 3), V((4 * (i + 1)) % (4 * k)));
    }
    for (VertexId x : g.vertices()) expect_valid_theta(g, x, find_theta(g, x));
  }
}

TEST(FindThetaTest, Preconditions) {
  EXPECT_THROW(find_theta(complete_graph(4), V(0)), DomainError);
  EXPECT_THROW(find_theta(wheel_graph(4), V(0)), DomainError);
  EXPECT_THROW(find_theta(prism_graph(), V(9)), DomainError);
  Graph two = prism_graph();
  for (const Edge& e : complete_bipartite(3, 3).edges()) two.add_edge(VertexId(e.u.value + 10), VertexId(e.v.value + 10));
  EXPECT_THROW(find_theta(two, V(0)), DomainError);
  EXPECT_THROW(base_case(cube_graph(), V(0)), DomainError);
}

}  // namespace
}  // namespace nonsep
