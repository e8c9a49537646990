#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "nonsep/families.hpp"
#include "nonsep/io.hpp"

namespace nonsep {
namespace {

namespace fs = std::filesystem;

struct Output {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("nonsep_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static Output run(const std::string& args) {
    std::string cmd = std::string(NONSEP_CLI) + " " + args + " 2>/dev/null";
    Output r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static std::string save(const std::string& name, const std::string& content) {
    write_file(path(name), content);
    return path(name);
  }

  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, GenerateFamilies) {
  Output sq = run("generate squarecycle 6");
  ASSERT_EQ(sq.code, 0);
  EXPECT_TRUE(are_isomorphic(parse_graph(sq.out), octahedron()));
  Output wf = run("generate wheelsfamily 3 5");
  ASSERT_EQ(wf.code, 0);
  EXPECT_EQ(parse_graph(wf.out).num_vertices(), 17u);
  Output lc = run("generate lineofcubic 1 10");
  ASSERT_EQ(lc.code, 0);
  Graph l = parse_graph(lc.out);
  EXPECT_EQ(l.num_vertices(), 15u);
  EXPECT_EQ(l.min_degree(), 4u);
  EXPECT_EQ(l.max_degree(), 4u);
  Output rm = run("generate randommindeg4 3 12 20 --json");
  ASSERT_EQ(rm.code, 0);
  EXPECT_GE(parse_graph(rm.out).min_degree(), 4u);
  EXPECT_EQ(run("generate randommindeg4 3 12 20").out, run("generate randommindeg4 3 12 20").out);
  EXPECT_EQ(run("generate brickcompose 5 6").code, 0);
  EXPECT_EQ(run("generate squarecycle 4").code, 2);
  EXPECT_EQ(run("generate lineofcubic 1 9").code, 2);
  EXPECT_EQ(run("generate nothing 1").code, 2);
  EXPECT_EQ(run("generate squarecycle").code, 2);
}

TEST_F(CliTest, ExtractSquareCycleAndVerify) {
  std::string g = save("c40.txt", run("generate squarecycle 40").out);
  std::string trace = path("c40.jsonl"), dot = path("c40.dot");
  Output ex = run("extract " + g + " --avoid 39 --mode 4conn --trace " + trace + " --dot " + dot);
  ASSERT_EQ(ex.code, 0);
  SubdivisionCertificate c = certificate_from_json(Json::parse(ex.out));
  EXPECT_EQ(c.pattern, PatternType::wheel(4));
  EXPECT_EQ(trace_from_jsonl(read_file(trace)).terminal, TerminalCase::SquareOfCycle);
  EXPECT_NE(read_file(dot).find("39 [shape=box"), std::string::npos);
  std::string cert = save("c40.json", ex.out);
  Output ok = run("verify " + g + " " + cert + " --avoid 39");
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(Json::parse(ok.out)["ok"]);
  Output bad = run("verify " + g + " " + cert + " --avoid 0");
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(Json::parse(bad.out)["avoids_x"]);
}

TEST_F(CliTest, ExitCodes) {
  std::string k35 = save("k35.txt", format_graph_text(complete_bipartite(3, 5)));
  EXPECT_EQ(run("extract " + k35 + " --mode 4conn").code, 2);
  std::string k6 = save("k6.txt", format_graph_text(complete_graph(6)));
  EXPECT_EQ(run("decompose " + k6).code, 2);
  EXPECT_EQ(run("extract " + k6 + " --avoid 17").code, 2);
  EXPECT_EQ(run("extract " + path("missing.txt")).code, 2);
  std::string junk = save("junk.txt", "3 x\n");
  EXPECT_EQ(run("extract " + junk).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("extract " + k6 + " --mode sideways").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, ComposeThenExtract) {
  std::string bp = save("bp.json", R"({"hvertices":[0],"hyperedges":[{"vertices":[0],"brick":"k5"},)"
                                   R"({"vertices":[0],"brick":"k222"}]})");
  Output g = run("compose " + bp);
  ASSERT_EQ(g.code, 0);
  std::string gf = save("bp.txt", g.out);
  EXPECT_EQ(parse_graph(g.out).num_vertices(), 10u);
  for (int x : {0, 3, 7}) {
    Output ex = run("extract " + gf + " --mode mindeg4 --avoid " + std::to_string(x));
    ASSERT_EQ(ex.code, 0);
    std::string cert = save("bp_cert.json", ex.out);
    EXPECT_EQ(run("verify " + gf + " " + cert + " --avoid " + std::to_string(x)).code, 0);
  }
  Output dec = run("decompose " + gf);
  ASSERT_EQ(dec.code, 0);
  EXPECT_EQ(Json::parse(dec.out)["hyperedges"].size(), 2u);
  std::string tb = save("tb.json", R"({"hyperedges":[{"vertices":[0,1,2],"brick":"k3"},{"vertices":[0],"brick":"k5"}]})");
  EXPECT_EQ(run("compose " + tb).code, 2);
  Output gen = run("generate brickcompose " + bp);
  EXPECT_EQ(gen.out, g.out);
}

TEST_F(CliTest, ThetaOracleLiftAndK4) {
  std::string pet = save("petersen.txt", format_graph_text(petersen_graph()));
  Output th = run("theta " + pet + " --avoid 0");
  ASSERT_EQ(th.code, 0);
  EXPECT_EQ(Json::parse(th.out)["pattern"], "theta");

  std::string k44 = save("k44.txt", format_graph_text(complete_bipartite(4, 4)));
  Output all = run("oracle " + k44 + " --avoid 0 --all");
  ASSERT_EQ(all.code, 0);
  Json certs = Json::parse(all.out);
  ASSERT_FALSE(certs.empty());
  for (const Json& c : certs) EXPECT_EQ(c["pattern"], "k33");
  std::string k35 = save("k35b.txt", format_graph_text(complete_bipartite(3, 5)));
  EXPECT_EQ(run("oracle " + k35 + " --avoid 0 --theta").code, 0);
  EXPECT_EQ(run("oracle " + k35 + " --avoid 0").code, 1);

  Output first = run("oracle " + k44 + " --avoid 0");
  ASSERT_EQ(first.code, 0);
  std::string k44c = save("k44c.json", first.out);
  Output del = run("lift " + k44 + " --edge 0 4 --op delete --cert " + k44c);
  EXPECT_EQ(del.code, 2);

  Graph k6 = complete_graph(6);
  std::string k6f = save("k6b.txt", format_graph_text(k6));
  Output k4 = run("extract " + k6f + " --avoid 2 --k4 --mode 4conn");
  ASSERT_EQ(k4.code, 0);
  std::string k4f = save("k4.json", Json::parse(k4.out)["k4"].dump());
  EXPECT_EQ(run("verify " + k6f + " " + k4f + " --k4 --avoid 2").code, 0);
}

TEST_F(CliTest, LiftContraction) {
  Graph g = complete_graph(6);
  std::string gf = save("k6c.txt", format_graph_text(g));
  Graph gp = contract_edge(g, Edge(VertexId(0), VertexId(1))).graph;
  std::string hf = save("k5c.json", run("oracle " + save("k5c.txt", graph_to_json(gp).dump()) + " --avoid 6").out);
  Output r = run("lift " + gf + " --edge 0 1 --op contract --cert " + hf);
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  SubdivisionCertificate c = certificate_from_json(j["certificate"]);
  EXPECT_TRUE(verify_certificate(g, c, std::nullopt).ok());
  EXPECT_TRUE(j["branch"].is_string());
}

TEST_F(CliTest, Batch) {
  fs::create_directories(dir_ / "batch");
  write_file(path("batch/a.txt"), format_graph_text(square_of_cycle(9)));
  write_file(path("batch/b.txt"), format_graph_text(complete_graph(5)));
  Output ok = run("extract --batch " + path("batch") + " --mode 4conn");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(std::count(ok.out.begin(), ok.out.end(), '\n'), 2);
  write_file(path("batch/c.txt"), format_graph_text(complete_bipartite(3, 5)));
  Output mixed = run("extract --batch " + path("batch") + " --mode 4conn");
  EXPECT_EQ(mixed.code, 2);
  EXPECT_NE(mixed.out.find("\"status\":2"), std::string::npos);
}

}  // namespace
}  // namespace nonsep
