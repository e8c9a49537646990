#include "nonsep/extractor.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "nonsep/bricks.hpp"
#include "nonsep/families.hpp"
#include "nonsep/oracle.hpp"

namespace nonsep {
namespace {

VertexId V(std::int64_t v) { return VertexId(v); }

VertexSet fig4_even(int l) {
  VertexSet s;
  for (int i = 0; i <= 4; ++i) s.insert(V(i));
  for (int i = 6; i <= l - 2; i += 2) s.insert(V(i));
  return s;
}

VertexSet fig4_odd(int l) {
  VertexSet s;
  for (int i = 0; i <= 3; ++i) s.insert(V(i));
  for (int i = 5; i <= l - 2; i += 2) s.insert(V(i));
  return s;
}

void expect_extracts(const Graph& g, ExtractMode mode) {
  for (VertexId x : g.vertices()) {
    SCOPED_TRACE("x = " + std::to_string(x.value));
    Extraction e = extract(g, x, mode);
    EXPECT_TRUE(verify_certificate(g, e.cert, x).ok());
    EXPECT_FALSE(e.cert.vertex_set().count(x));
  }
}

TEST(SquareOfCycleTest, EvenSquareWheel) {
  Graph g = square_of_cycle(40);
  Extraction e = extract_4connected(g, V(39));
  EXPECT_EQ(e.cert.pattern, PatternType::wheel(4));
  EXPECT_EQ(e.cert.vertex_set(), fig4_even(40));
  EXPECT_TRUE(verify_certificate(g, e.cert, V(39)).ok());
  EXPECT_EQ(e.trace.terminal, TerminalCase::SquareOfCycle);
  EXPECT_TRUE(e.trace.steps.empty());
}

TEST(SquareOfCycleTest, OddSquareK4) {
  Graph g = square_of_cycle(39);
  Extraction e = extract_4connected(g, V(38));
  EXPECT_EQ(e.cert.pattern, PatternType::wheel(3));
  EXPECT_EQ(e.cert.vertex_set(), fig4_odd(39));
  EXPECT_TRUE(verify_certificate(g, e.cert, V(38)).ok());
}

TEST(SquareOfCycleTest, EveryLengthAndRotation) {
  for (int l = 5; l <= 24; ++l) {
    Graph g = square_of_cycle(l);
    auto sq = is_square_of_cycle(g);
    ASSERT_TRUE(sq);
    EXPECT_EQ(sq->length, l);
    for (VertexId x : g.vertices()) {
      SubdivisionCertificate c = square_of_cycle_certificate(g, *sq, x);
      EXPECT_TRUE(verify_certificate(g, c, x).ok()) << l << " " << x.value;
      EXPECT_EQ(c.pattern, PatternType::wheel(l % 2 == 0 ? 4 : 3));
      EXPECT_EQ(c.vertex_set().size(), static_cast<std::size_t>(l % 2 == 0 ? l / 2 + 2 : (l + 3) / 2));
    }
  }
}

TEST(SquareOfCycleTest, Recognition) {
  auto k5 = is_square_of_cycle(complete_graph(5));
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->length, 5);
  auto k222 = is_square_of_cycle(octahedron());
  ASSERT_TRUE(k222);
  EXPECT_EQ(k222->length, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NE(k222->order[i].value % 3, k222->order[(i + 1) % 6].value % 3);
  }
  EXPECT_FALSE(is_square_of_cycle(complete_bipartite(4, 4)));
}

TEST(LineGraphTest, Recognition) {
  for (const Graph& y : {petersen_graph(), heawood_graph(), cube_graph(), prism_graph(), complete_bipartite(3, 3)}) {
    LineGraph lg = line_graph(y);
    auto root = is_line_graph_of_cubic(lg.graph);
    ASSERT_TRUE(root);
    EXPECT_TRUE(are_isomorphic(root->y, y));
    EXPECT_TRUE(are_isomorphic(line_graph(root->y).graph, lg.graph));
  }
  auto k4 = is_line_graph_of_cubic(square_of_cycle(6));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(are_isomorphic(k4->y, complete_graph(4)));
  EXPECT_FALSE(is_line_graph_of_cubic(complete_bipartite(4, 4)));
  EXPECT_FALSE(is_line_graph_of_cubic(square_of_cycle(7)));
}

TEST(LineGraphTest, PetersenGivesPrism) {
  Graph g = line_graph(petersen_graph()).graph;
  for (VertexId x : g.vertices()) {
    Extraction e = extract_min_degree4(g, x);
    EXPECT_EQ(e.cert.pattern, PatternType::prism());
    EXPECT_TRUE(verify_certificate(g, e.cert, x).ok());
    Extraction f = extract_4connected(g, x);
    EXPECT_EQ(f.trace.terminal, TerminalCase::LineOfCubic);
    EXPECT_EQ(f.cert.pattern, PatternType::prism());
  }
}

TEST(ContractibleEdgeTest, Examples) {
  EXPECT_FALSE(find_contractible_edge(square_of_cycle(7)));
  EXPECT_FALSE(find_contractible_edge(line_graph(petersen_graph()).graph));
  auto k6 = find_contractible_edge(complete_graph(6));
  ASSERT_TRUE(k6);
  EXPECT_EQ(*k6, Edge(V(0), V(1)));
  Graph k44 = complete_bipartite(4, 4);
  auto e = find_contractible_edge(k44);
  ASSERT_TRUE(e);
  EXPECT_TRUE(is_k_connected(contract_edge(k44, *e).graph, 4));
  EXPECT_THROW(find_contractible_edge(complete_bipartite(3, 5)), DomainError);
}

TEST(ContractibleEdgeTest, SquareOfSevenCycleExhaustive) {
  Graph g = square_of_cycle(7);
  ASSERT_EQ(g.num_edges(), 14u);
  for (const Edge& e : g.edges()) EXPECT_FALSE(is_k_connected(contract_edge(g, e).graph, 4));
}

TEST(Extract4ConnectedTest, K44GivesK33) {
  Graph g = complete_bipartite(4, 4);
  for (VertexId x : g.vertices()) {
    Extraction e = extract_4connected(g, x);
    EXPECT_EQ(e.cert.pattern, PatternType::k33());
    EXPECT_TRUE(verify_certificate(g, e.cert, x).ok());
  }
}

TEST(Extract4ConnectedTest, Preconditions) {
  EXPECT_THROW(extract_4connected(complete_bipartite(3, 5), V(0)), DomainError);
  EXPECT_THROW(extract_4connected(complete_graph(6), V(9)), DomainError);
  EXPECT_THROW(extract_min_degree4(complete_graph(4), V(0)), DomainError);
  Graph two = complete_graph(5);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) two.add_edge(V(10 + i), V(10 + j));
  }
  EXPECT_THROW(extract_min_degree4(two, V(0)), DomainError);
}

TEST(Extract4ConnectedTest, Corpus) {
  std::vector<Graph> corpus{complete_graph(5), complete_graph(6), complete_bipartite(4, 4), icosahedron_graph(),
                            octahedron()};
  for (int l = 5; l <= 12; ++l) corpus.push_back(square_of_cycle(l));
  for (int n : {6, 8, 10}) {
    for (const Graph& y : connected_cubic_graphs(n)) {
      Graph g = line_graph(y).graph;
      if (is_k_connected(g, 4)) corpus.push_back(g);
    }
  }
  for (const Graph& g : corpus) expect_extracts(g, ExtractMode::FourConnected);
}

TEST(ExtractMinDegree4Test, CutvertexComposition) {
  Blueprint bp;
  bp.hyperedges = {{BrickType::K5, {V(0)}}, {BrickType::K222, {V(0)}}};
  Graph g = compose(bp).graph;
  ASSERT_TRUE(oracle_search(g, V(0)));
  Extraction e = extract_min_degree4(g, V(0));
  EXPECT_TRUE(verify_certificate(g, e.cert, V(0)).ok());
  expect_extracts(g, ExtractMode::MinDegree4);
}

TEST(ExtractMinDegree4Test, SquareOfTwelveCycle) {
  Graph g = square_of_cycle(12);
  for (VertexId x : g.vertices()) {
    Extraction e = extract_min_degree4(g, x);
    EXPECT_EQ(e.cert.pattern, PatternType::wheel(4));
    EXPECT_EQ(e.trace.terminal, TerminalCase::SquareOfCycle);
  }
}

TEST(ExtractMinDegree4Test, WheelsFamily) {
  for (int l = 4; l <= 7; ++l) {
    Graph g = wheels_family(3, l);
    for (VertexId x : g.vertices()) {
      Extraction e = extract_min_degree4(g, x);
      EXPECT_EQ(e.cert.pattern, PatternType::wheel(l)) << l << " " << x.value;
      EXPECT_TRUE(verify_certificate(g, e.cert, x).ok());
    }
  }
}

TEST(ExtractMinDegree4Test, GeneratedAndRandom) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph a = compose(generate_blueprint(seed, 2 + static_cast<int>(seed % 8))).graph;
    Graph b = random_min_degree4(seed, 8 + static_cast<int>(seed % 8), 30);
    for (const Graph* g : {&a, &b}) {
      auto vs = g->vertices();
      VertexId x = vs[Rng(seed).below(vs.size())];
      Extraction e = extract_min_degree4(*g, x);
      EXPECT_TRUE(verify_certificate(*g, e.cert, x).ok()) << seed;
      for (const ReductionStep& s : e.trace.steps) EXPECT_FALSE(s.lift.empty());
    }
  }
}

/// Blueprint whose K3 bricks are the vertices of a cubic root graph. Root
/// vertices >= 100 are pendant ends, and the bricks of `small` attach at the
/// labels of the pendant edges.
Blueprint rooted_blueprint(const std::vector<Edge>& root, BrickType small) {
  Blueprint bp;
  std::map<VertexId, std::vector<VertexId>> at;
  std::vector<VertexId> pendant;
  for (std::size_t i = 0; i < root.size(); ++i) {
    for (VertexId end : {root[i].u, root[i].v}) {
      (end.value >= 100 ? pendant : at[end]).push_back(V(static_cast<std::int64_t>(i)));
    }
  }
  for (const auto& [v, labels] : at) bp.hyperedges.push_back({BrickType::K3, labels});
  bp.hyperedges.push_back({small, pendant});
  return bp;
}

std::vector<Edge> cube_without_01(std::initializer_list<std::pair<int, int>> extra) {
  std::vector<Edge> es;
  for (const Edge& e : cube_graph().edges()) {
    if (e != Edge(V(0), V(1))) es.push_back(e);
  }
  for (auto [a, b] : extra) es.emplace_back(V(a), V(b));
  return es;
}

struct SmallHyperedgeCase {
  const char* name;
  std::vector<Edge> root;
  BrickType type;
  std::string surgery;
};

TEST(BrickSurgeryTest, LastSmallHyperedge) {
  const std::vector<SmallHyperedgeCase> cases{
      {"adjacent", cube_without_01({{8, 0}, {8, 1}, {9, 100}, {9, 101}, {9, 8}}), BrickType::K5bowtie,
       "two-copy-gluing-adjacent"},
      {"adjacent", cube_without_01({{8, 0}, {8, 1}, {9, 100}, {9, 101}, {9, 8}}), BrickType::K222bowtie,
       "two-copy-gluing-adjacent"},
      {"disjoint", cube_without_01({{0, 100}, {1, 101}}), BrickType::K5bowtie, "contract-2-hyperedge"},
      {"gadget", cube_without_01({{8, 100}, {9, 101}, {8, 9}, {8, 0}, {9, 1}}), BrickType::K222bowtie, "k4-gadget"},
      {"gadget", cube_without_01({{8, 100}, {9, 101}, {8, 9}, {8, 0}, {9, 1}}), BrickType::K5bowtie, "k4-gadget"},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    Composition comp = compose(rooted_blueprint(c.root, c.type));
    ASSERT_TRUE(is_minimal_critical(comp.graph));
    const Brick& small = comp.decomposition.bricks.back();
    ASSERT_EQ(small.type, c.type);
    for (VertexId x : small.inner) {
      Extraction e = extract_min_degree4(comp.graph, x);
      EXPECT_TRUE(verify_certificate(comp.graph, e.cert, x).ok());
      ASSERT_FALSE(e.trace.steps.empty());
      EXPECT_EQ(e.trace.steps[0].kind, ReductionKind::BrickSurgery);
      EXPECT_EQ(e.trace.steps[0].surgery, to_string(c.type) + ": " + c.surgery);
    }
  }
}

TEST(BrickSurgeryTest, NablaBecomesTriangle) {
  Blueprint bp;
  bp.hyperedges = {{BrickType::K5nabla, {V(0), V(1), V(2)}},
                   {BrickType::K5nabla, {V(0), V(1), V(2)}},
                   {BrickType::K222nabla, {V(0), V(1), V(2)}}};
  Graph g = compose(bp).graph;
  ASSERT_TRUE(is_minimal_critical(g));
  Extraction e = extract_min_degree4(g, V(0));
  ASSERT_FALSE(e.trace.steps.empty());
  EXPECT_NE(e.trace.steps[0].surgery.find("nabla-to-triangle"), std::string::npos);
  EXPECT_TRUE(verify_certificate(g, e.cert, V(0)).ok());
}

TEST(ReplayTest, ReproducesEveryGraph) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = seed % 2 ? random_min_degree4(seed, 10, 32) : compose(generate_blueprint(seed, 5)).graph;
    Extraction e = extract_min_degree4(g, g.vertices().front());
    std::vector<Graph> graphs = replay(g, e.trace);
    ASSERT_EQ(graphs.size(), e.trace.steps.size() + 1);
    EXPECT_EQ(graphs.front(), g);
    for (std::size_t i = 0; i < e.trace.steps.size(); ++i) {
      const ReductionStep& s = e.trace.steps[i];
      EXPECT_EQ(graphs[i].num_vertices(), s.before_vertices);
      EXPECT_EQ(graphs[i + 1].num_edges(), s.after_edges);
      EXPECT_TRUE(in_class_c(graphs[i + 1]));
      EXPECT_TRUE(graphs[i + 1].has_vertex(s.avoid_after));
    }
  }
  ReductionTrace bad;
  ReductionStep s;
  s.kind = ReductionKind::DeleteEdge;
  s.edge = Edge(V(0), V(7));
  bad.steps.push_back(s);
  EXPECT_THROW(replay(complete_graph(5), bad), DomainError);
}

TEST(ReplayTest, DepthBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_min_degree4(seed, 12, 40);
    Extraction e = extract_min_degree4(g, V(0));
    std::size_t non_deletion = std::count_if(e.trace.steps.begin(), e.trace.steps.end(), [](const ReductionStep& s) {
      return s.kind != ReductionKind::DeleteEdge;
    });
    EXPECT_LE(non_deletion, g.num_vertices());
  }
}

TEST(OracleAgreementTest, SmallGraphs) {
  std::vector<Graph> corpus{complete_graph(5), complete_graph(6), octahedron(), complete_bipartite(4, 4),
                            square_of_cycle(7), square_of_cycle(9)};
  for (std::uint64_t seed = 0; seed < 15; ++seed) corpus.push_back(random_min_degree4(seed, 7 + seed % 4, 20));
  for (const Graph& g : corpus) {
    for (VertexId x : g.vertices()) {
      Extraction e = extract_min_degree4(g, x);
      auto all = oracle_enumerate(g, x);
      ASSERT_FALSE(all.empty());
      EXPECT_NE(std::find(all.begin(), all.end(), e.cert), all.end());
    }
  }
}

TEST(ExtractK4Test, K5AndCorpus) {
  Graph k5 = complete_graph(5);
  for (VertexId x : k5.vertices()) {
    K4Extraction r = extract_k4(k5, x, ExtractMode::FourConnected);
    VertexSet rest = k5.vertex_set();
    rest.erase(x);
    EXPECT_EQ(r.k4.vertex_set(), rest);
    EXPECT_EQ(r.k4.edge_count(), 6u);
  }
  std::vector<Graph> corpus{complete_bipartite(4, 4), square_of_cycle(10), line_graph(petersen_graph()).graph,
                            icosahedron_graph()};
  for (const Graph& g : corpus) {
    for (VertexId x : g.vertices()) {
      K4Extraction r = extract_k4(g, x, ExtractMode::FourConnected);
      EXPECT_TRUE(verify_k4_subgraph(g, r.k4, x).ok());
      EXPECT_EQ(r.k4.vertex_set(), r.certificate.vertex_set());
      VertexSet orig = r.original.vertex_set();
      for (VertexId v : r.certificate.vertex_set()) EXPECT_TRUE(orig.count(v));
    }
  }
}

TEST(ExtractK4Test, WheelsFamilySpansWheel) {
  Graph g = wheels_family(3, 6);
  for (VertexId x : g.vertices()) {
    K4Extraction r = extract_k4(g, x, ExtractMode::MinDegree4);
    EXPECT_EQ(r.original.pattern, PatternType::wheel(6));
    EXPECT_TRUE(verify_k4_subgraph(g, r.k4, x).ok());
  }
}

TEST(ShrinkTest, SurplusSpokes) {
  Graph g = wheels_family(3, 5);
  Extraction e = extract_min_degree4(g, V(0));
  ASSERT_EQ(e.cert.pattern, PatternType::wheel(5));
  SubdivisionCertificate s = shrink_for_spanning_k4(g, e.cert);
  EXPECT_TRUE(admits_spanning_k4(s));
  EXPECT_TRUE(verify_certificate(g, s, V(0)).ok());
}

}  // namespace
}  // namespace nonsep
