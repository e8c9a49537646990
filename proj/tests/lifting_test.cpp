#include "nonsep/lifting.hpp"

#include <gtest/gtest.h>

#include "nonsep/families.hpp"
#include "nonsep/oracle.hpp"

namespace nonsep {
namespace {

VertexId V(std::int64_t v) { return VertexId(v); }

constexpr std::int64_t kX = 100, kY = 101, kBlob = 200;

/// Joins every vertex below kBlob to three vertices of a K5 "blob" so that all
/// degrees reach 4 while the pattern part stays induced and nonseparating.
void attach_blob(Graph& g) {
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) g.add_edge(V(kBlob + i), V(kBlob + j));
  }
  int k = 0;
  for (VertexId v : g.vertices()) {
    if (v.value >= kBlob) continue;
    for (int t = 0; t < 3; ++t) g.add_edge(v, V(kBlob + (k + t) % 5));
    k++;
  }
}

struct Expansion {
  LiftContext ctx;
  VertexSet pattern_vertices;  ///< in G', with the split vertex replaced by v
};

/// G is obtained from `shape` by splitting vertex `split` into x, y with the
/// given neighbour kinds, then adding the blob; G' = G / xy.
Expansion expand(const Graph& shape, VertexId split, const std::map<VertexId, NeighborKind>& kinds) {
  Graph g;
  for (VertexId v : shape.vertices()) {
    if (v != split) g.add_vertex(v);
  }
  for (const Edge& e : shape.edges()) {
    if (!e.contains(split)) g.add_edge(e.u, e.v);
  }
  g.add_edge(V(kX), V(kY));
  for (VertexId w : shape.neighbors(split)) {
    NeighborKind k = kinds.at(w);
    if (k != NeighborKind::Y) g.add_edge(V(kX), w);
    if (k != NeighborKind::X) g.add_edge(V(kY), w);
  }
  attach_blob(g);
  Contraction c = contract_edge(g, Edge(V(kX), V(kY)));
  Expansion ex;
  ex.ctx.g = g;
  ex.ctx.g_prime = c.graph;
  ex.ctx.operation = ContractOp{V(kX), V(kY), c.merged};
  for (VertexId v : shape.vertices()) ex.pattern_vertices.insert(v == split ? c.merged : v);
  auto h = recognize_induced_subdivision(c.graph, ex.pattern_vertices);
  EXPECT_TRUE(h.has_value());
  if (h) ex.ctx.h_prime = *h;
  return ex;
}

std::map<VertexId, NeighborKind> kinds_from(const std::vector<VertexId>& order, const std::string& code) {
  std::map<VertexId, NeighborKind> m;
  for (std::size_t i = 0; i < order.size(); ++i) {
    m[order[i]] = code[i] == 'x' ? NeighborKind::X : code[i] == 'y' ? NeighborKind::Y : NeighborKind::XY;
  }
  return m;
}

/// Wheel W_l with center 0 and rim 1..l; kinds of rim vertices in rim order.
Expansion expand_wheel_center(const std::string& code) {
  const int l = static_cast<int>(code.size());
  std::vector<VertexId> rim;
  for (int i = 1; i <= l; ++i) rim.push_back(V(i));
  return expand(wheel_graph(l), V(0), kinds_from(rim, code));
}

Graph subdivide(Graph g, VertexId a, VertexId b, VertexId mid) {
  g.remove_edge(a, b);
  g.add_edge(a, mid);
  g.add_edge(mid, b);
  return g;
}

void expect_contained(const LiftContext& ctx, const LiftResult& r) {
  VertexSet allowed = ctx.lift_set();
  for (VertexId v : r.cert.vertex_set()) EXPECT_TRUE(allowed.count(v)) << v;
  EXPECT_TRUE(verify_certificate(ctx.g, r.cert, std::nullopt).ok());
}

TEST(ClassifyNeighborsTest, Basics) {
  Graph g = complete_graph(5);
  NeighborClass all = classify_neighbors(g, V(0), V(1), {V(2), V(3), V(4)});
  for (const auto& [w, k] : all) EXPECT_EQ(k, NeighborKind::XY);

  Graph h = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  NeighborClass c = classify_neighbors(h, V(0), V(1), {V(2), V(3)});
  EXPECT_EQ(c.at(V(2)), NeighborKind::X);
  EXPECT_EQ(c.at(V(3)), NeighborKind::Y);
  h.add_vertex(V(7));
  EXPECT_THROW(classify_neighbors(h, V(0), V(1), {V(7)}), DomainError);
  EXPECT_THROW(classify_neighbors(h, V(2), V(3), {}), DomainError);
}

TEST(LiftContractionTest, UntouchedCertificate) {
  Expansion ex = expand_wheel_center("xyxy");
  auto h = oracle_enumerate(ex.ctx.g_prime, std::nullopt, {20});
  bool tried = false;
  for (const auto& c : h) {
    if (c.vertex_set().count(std::get<ContractOp>(ex.ctx.operation).v)) continue;
    ex.ctx.h_prime = c;
    LiftResult r = lift_through_contraction(ex.ctx);
    EXPECT_EQ(r.branch, LiftBranch::Unchanged);
    EXPECT_EQ(r.cert.vertex_set(), c.vertex_set());
    tried = true;
    break;
  }
  EXPECT_TRUE(tried);
}

TEST(LiftContractionTest, AlternatingFourWheelGivesK33) {
  Expansion ex = expand_wheel_center("xyxy");
  LiftResult r = lift_through_contraction(ex.ctx);
  EXPECT_EQ(r.branch, LiftBranch::AlternatingK33);
  EXPECT_EQ(r.cert.pattern, PatternType::k33());
  EXPECT_EQ(r.cert.vertex_set(), ex.ctx.lift_set());
  expect_contained(ex.ctx, r);
}

TEST(LiftContractionTest, K4WithPrincipalXYNeighbourGivesFourWheel) {
  Expansion ex = expand(complete_graph(4), V(0), kinds_from({V(1), V(2), V(3)}, "xyb"));
  LiftResult r = lift_through_contraction(ex.ctx);
  EXPECT_EQ(r.branch, LiftBranch::Case2K4Wheel);
  EXPECT_EQ(r.cert.pattern, PatternType::wheel(4));
  EXPECT_EQ(r.cert.branch[0], V(3));
  expect_contained(ex.ctx, r);
}

struct WheelCase {
  std::string code;
  LiftBranch branch;
};

class WheelCenterLift : public ::testing::TestWithParam<WheelCase> {};

TEST_P(WheelCenterLift, TakesExpectedBranch) {
  Expansion ex = expand_wheel_center(GetParam().code);
  LiftResult r = lift_through_contraction(ex.ctx);
  EXPECT_EQ(r.branch, GetParam().branch) << to_string(r.branch);
  expect_contained(ex.ctx, r);
}

INSTANTIATE_TEST_SUITE_P(
    Branches, WheelCenterLift,
    ::testing::Values(WheelCase{"bbxy", LiftBranch::Case3Adjacent}, WheelCase{"bxxbxy", LiftBranch::Case3Uniform},
                      WheelCase{"bxybxy", LiftBranch::Case3Mixed}, WheelCase{"bxxx", LiftBranch::Case4NoY},
                      WheelCase{"byyy", LiftBranch::Case4NoY}, WheelCase{"bxxy", LiftBranch::Case4OneY},
                      WheelCase{"bxyy", LiftBranch::Case4OneY}, WheelCase{"bxxyy", LiftBranch::Case4Mixed},
                      WheelCase{"xxxx", LiftBranch::RunAll}, WheelCase{"yyyyy", LiftBranch::RunAll},
                      WheelCase{"xxxy", LiftBranch::RunLong}, WheelCase{"xxyy", LiftBranch::RunPrism},
                      WheelCase{"xxyxy", LiftBranch::RunShort}, WheelCase{"xyxyxxyy", LiftBranch::RunShort},
                      WheelCase{"xyxy", LiftBranch::AlternatingK33},
                      WheelCase{"xyxyxy", LiftBranch::AlternatingK4},
                      WheelCase{"yxyxyxyx", LiftBranch::AlternatingK4}));

TEST(LiftContractionTest, CaseOneSubcases) {
  const std::vector<VertexId> nb{V(1), V(2), V(3)};
  EXPECT_EQ(lift_through_contraction(expand(complete_graph(4), V(0), kinds_from(nb, "bbb")).ctx).branch,
            LiftBranch::Case1AllXY);
  EXPECT_EQ(lift_through_contraction(expand(complete_graph(4), V(0), kinds_from(nb, "xbb")).ctx).branch,
            LiftBranch::Case1NoY);
  EXPECT_EQ(lift_through_contraction(expand(complete_graph(4), V(0), kinds_from(nb, "yyb")).ctx).branch,
            LiftBranch::Case1NoX);
  EXPECT_EQ(lift_through_contraction(expand(complete_graph(4), V(0), kinds_from(nb, "xyy")).ctx).branch,
            LiftBranch::Case1Mixed);
  // v as a subdivision vertex of a spoke.
  Graph k4s = subdivide(complete_graph(4), V(0), V(1), V(9));
  Expansion ex = expand(k4s, V(9), kinds_from({V(0), V(1)}, "xy"));
  LiftResult r = lift_through_contraction(ex.ctx);
  EXPECT_EQ(r.branch, LiftBranch::Case1Mixed);
  expect_contained(ex.ctx, r);
}

TEST(LiftContractionTest, CaseTwoPatterns) {
  struct Item {
    Graph shape;
    VertexId split;
    std::vector<VertexId> order;
    std::string code;
    LiftBranch branch;
  };
  Graph k4s = subdivide(complete_graph(4), V(0), V(3), V(9));
  Graph w5 = wheel_graph(5);
  Graph w5s = subdivide(w5, V(0), V(1), V(9));
  std::vector<Item> items{
      {k4s, V(0), {V(1), V(2), V(9)}, "xyb", LiftBranch::Case2K4Prism},
      {complete_bipartite(3, 3), V(0), {V(3), V(4), V(5)}, "xyb", LiftBranch::Case2K33},
      {prism_graph(), V(0), {V(1), V(2), V(3)}, "xyb", LiftBranch::Case2PrismOnPartner},
      {prism_graph(), V(0), {V(1), V(2), V(3)}, "bxy", LiftBranch::Case2PrismOnMate},
      {prism_graph(), V(0), {V(1), V(2), V(3)}, "ybx", LiftBranch::Case2PrismOnMate},
      {w5, V(1), {V(0), V(2), V(5)}, "xby", LiftBranch::Case2WheelRim},
      {w5, V(1), {V(0), V(2), V(5)}, "xyb", LiftBranch::Case2WheelRim},
      {w5, V(1), {V(0), V(2), V(5)}, "bxy", LiftBranch::Case2WheelCenter},
      {w5s, V(1), {V(9), V(2), V(5)}, "bxy", LiftBranch::Case2WheelSpoke},
  };
  for (const Item& it : items) {
    Expansion ex = expand(it.shape, it.split, kinds_from(it.order, it.code));
    LiftResult r = lift_through_contraction(ex.ctx);
    EXPECT_EQ(r.branch, it.branch) << it.code << " got " << to_string(r.branch);
    expect_contained(ex.ctx, r);
  }
}

TEST(LiftContractionTest, Preconditions) {
  Expansion ex = expand_wheel_center("xyxy");
  LiftContext bad = ex.ctx;
  bad.operation = DeleteOp{V(kX), V(kY)};
  EXPECT_THROW(lift_through_contraction(bad), DomainError);
  bad = ex.ctx;
  bad.g_prime = ex.ctx.g;
  EXPECT_THROW(lift_through_contraction(bad), DomainError);
  bad = ex.ctx;
  bad.h_prime.paths[0].pop_back();
  EXPECT_THROW(lift_through_contraction(bad), DomainError);
  bad = ex.ctx;
  bad.g_prime.add_vertex(V(999));
  EXPECT_THROW(lift_through_contraction(bad), DomainError);
}

/// G' = shape + blob, H' = shape, G = G' + xy.
LiftContext deletion_context(const Graph& shape, VertexId x, VertexId y) {
  LiftContext ctx;
  Graph gp = shape;
  attach_blob(gp);
  ctx.g_prime = gp;
  gp.add_edge(x, y);
  ctx.g = gp;
  ctx.operation = DeleteOp{x, y};
  auto h = recognize_induced_subdivision(ctx.g_prime, shape.vertex_set());
  EXPECT_TRUE(h.has_value());
  if (h) ctx.h_prime = *h;
  return ctx;
}

TEST(LiftDeletionTest, EdgeAwayFromCertificate) {
  LiftContext ctx = deletion_context(wheel_graph(5), V(0), V(1));
  Graph g = ctx.g_prime;
  for (int i = 0; i < 5; ++i) g.add_edge(V(kBlob + 5), V(kBlob + i));
  ctx.g_prime = g;
  g.add_edge(V(kBlob + 5), V(1));
  ctx.g = g;
  ctx.operation = DeleteOp{V(kBlob + 5), V(1)};
  LiftResult r = lift_through_deletion(ctx);
  EXPECT_EQ(r.branch, LiftBranch::Unchanged);
  EXPECT_EQ(r.cert.vertex_set(), ctx.h_prime.vertex_set());
}

TEST(LiftDeletionTest, ChordReroutes) {
  Graph shape = wheel_graph(4);
  shape = subdivide(shape, V(1), V(2), V(10));
  shape = subdivide(shape, V(10), V(2), V(11));
  shape = subdivide(shape, V(11), V(2), V(12));
  LiftContext ctx = deletion_context(shape, V(10), V(12));
  LiftResult r = lift_through_deletion(ctx);
  EXPECT_EQ(r.branch, LiftBranch::Chord);
  EXPECT_FALSE(r.cert.vertex_set().count(V(11)));
  EXPECT_EQ(r.cert.pattern, PatternType::wheel(4));
  expect_contained(ctx, r);
}

TEST(LiftDeletionTest, K33SameClassGivesK4) {
  LiftContext ctx = deletion_context(complete_bipartite(3, 3), V(0), V(1));
  LiftResult r = lift_through_deletion(ctx);
  EXPECT_EQ(r.branch, LiftBranch::K33SameClass);
  EXPECT_EQ(r.cert.pattern, PatternType::k4());
  VertexSet expected{V(0), V(1), V(2), V(4), V(5)};
  EXPECT_EQ(r.cert.vertex_set(), expected);
  expect_contained(ctx, r);
}

TEST(LiftDeletionTest, PatternBranches) {
  struct Item {
    Graph shape;
    VertexId x, y;
    LiftBranch branch;
  };
  Graph k33s = subdivide(complete_bipartite(3, 3), V(0), V(3), V(9));
  Graph prism_t = subdivide(prism_graph(), V(0), V(1), V(9));
  Graph prism_m = subdivide(subdivide(prism_graph(), V(0), V(3), V(9)), V(1), V(4), V(10));
  Graph w3 = subdivide(subdivide(complete_graph(4), V(0), V(1), V(9)), V(2), V(3), V(10));
  Graph w5 = subdivide(subdivide(wheel_graph(5), V(1), V(2), V(9)), V(0), V(3), V(10));
  Graph w6 = subdivide(wheel_graph(6), V(1), V(2), V(9));
  Graph w6s = subdivide(w6, V(3), V(4), V(10));
  std::vector<Item> items{
      {k33s, V(9), V(1), LiftBranch::K33Internal},
      {prism_graph(), V(0), V(4), LiftBranch::PrismPrincipal},
      {prism_t, V(9), V(5), LiftBranch::PrismTriangle},
      {prism_m, V(9), V(10), LiftBranch::PrismMatching},
      {prism_m, V(3), V(10), LiftBranch::PrismMatching},
      {w3, V(9), V(10), LiftBranch::WheelDisjointPaths},
      {w6s, V(9), V(10), LiftBranch::WheelRimShort},
      {w6, V(9), V(5), LiftBranch::WheelRimLong},
      {w5, V(0), V(9), LiftBranch::WheelCenter},
      {w5, V(10), V(1), LiftBranch::WheelSpoke},
      {w5, V(10), V(9), LiftBranch::WheelSpoke},
  };
  for (const Item& it : items) {
    LiftContext ctx = deletion_context(it.shape, it.x, it.y);
    LiftResult r = lift_through_deletion(ctx);
    EXPECT_EQ(r.branch, it.branch) << it.x << "-" << it.y << " got " << to_string(r.branch);
    expect_contained(ctx, r);
  }
}

TEST(LiftPropertyTest, RandomGraphsAllLiftsVerify) {
  std::map<LiftBranch, int> seen;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 7 + static_cast<int>(seed % 4);
    Graph g = random_min_degree4(seed, n, 2 * n + static_cast<int>(seed % 7));
    for (const Edge& e : g.edges()) {
      for (int mode = 0; mode < 2; ++mode) {
        LiftContext ctx;
        ctx.g = g;
        if (mode == 0) {
          Contraction c = contract_edge(g, e);
          ctx.g_prime = c.graph;
          ctx.operation = ContractOp{e.u, e.v, c.merged};
        } else {
          ctx.g_prime = delete_edge(g, e);
          ctx.operation = DeleteOp{e.u, e.v};
        }
        if (ctx.g_prime.min_degree() < 4) continue;
        for (const auto& c : oracle_enumerate(ctx.g_prime, std::nullopt, {}, 10)) {
          ctx.h_prime = c;
          LiftResult r = lift(ctx);
          expect_contained(ctx, r);
          seen[r.branch]++;
        }
      }
    }
  }
  EXPECT_GT(seen.size(), 15u);
}

}  // namespace
}  // namespace nonsep
