#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/bricks.hpp"
#include "nonsep/cubic_theta.hpp"
#include "nonsep/extractor.hpp"
#include "nonsep/families.hpp"
#include "nonsep/io.hpp"
#include "nonsep/lifting.hpp"
#include "nonsep/oracle.hpp"

namespace {

using namespace nonsep;

constexpr int kOk = 0, kFailed = 1, kPrecondition = 2, kInvariant = 3;

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_graph(const Graph& g, bool json) {
  if (json) {
    emit(graph_to_json(g));
  } else {
    std::cout << format_graph_text(g);
  }
}

ExtractMode parse_mode(const std::string& m) {
  if (m == "4conn") return ExtractMode::FourConnected;
  if (m == "mindeg4") return ExtractMode::MinDegree4;
  throw DomainError("unknown mode " + m);
}

std::int64_t to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError(std::string(what) + ": not an integer: " + s);
  return v;
}

struct ExtractArgs {
  std::string graph, batch, mode = "mindeg4", trace, dot;
  std::int64_t avoid = 0;
  bool k4 = false;
};

Json extract_one(const Graph& g, const ExtractArgs& a, ReductionTrace* trace, VertexSet* shown) {
  VertexId x(a.avoid);
  ExtractMode mode = parse_mode(a.mode);
  if (a.k4) {
    K4Extraction r = extract_k4(g, x, mode);
    if (trace) *trace = r.trace;
    if (shown) *shown = r.k4.vertex_set();
    return {{"certificate", certificate_to_json(r.certificate)},
            {"k4", certificate_to_json(r.k4)},
            {"original", certificate_to_json(r.original)}};
  }
  Extraction e = extract(g, x, mode);
  if (trace) *trace = e.trace;
  if (shown) *shown = e.cert.vertex_set();
  return certificate_to_json(e.cert);
}

int run_extract(const ExtractArgs& a) {
  if (!a.batch.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(a.batch)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    int worst = kOk;
    for (const auto& f : files) {
      Json line{{"file", f.filename().string()}};
      try {
        line["certificate"] = extract_one(read_graph_file(f.string()), a, nullptr, nullptr);
        line["status"] = kOk;
      } catch (const DomainError& e) {
        line["status"] = kPrecondition;
        line["error"] = e.what();
      } catch (const InvariantViolation& e) {
        line["status"] = kInvariant;
        line["error"] = e.what();
      }
      worst = std::max(worst, line["status"].get<int>());
      emit(line);
    }
    return worst;
  }
  if (a.graph.empty()) throw DomainError("extract: a graph file or --batch is required");
  Graph g = read_graph_file(a.graph);
  ReductionTrace trace;
  VertexSet shown;
  emit(extract_one(g, a, &trace, &shown));
  if (!a.trace.empty()) write_file(a.trace, trace_to_jsonl(trace));
  if (!a.dot.empty()) write_file(a.dot, to_dot(g, shown, VertexId(a.avoid)));
  return kOk;
}

Graph generate(const std::string& family, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw DomainError("generate " + family + ": expected " + std::to_string(n) + " parameters");
    }
  };
  if (family == "squarecycle") {
    need(1);
    std::int64_t l = to_int(args[0], "length");
    if (l < 5) throw DomainError("generate squarecycle: length must be at least 5");
    return square_of_cycle(static_cast<int>(l));
  }
  if (family == "lineofcubic") {
    need(2);
    std::int64_t seed = to_int(args[0], "seed"), n = to_int(args[1], "n");
    if (seed < 0 || n < 4 || n % 2 != 0) throw DomainError("generate lineofcubic: n must be even and at least 4");
    return line_graph(random_connected_cubic(static_cast<std::uint64_t>(seed), static_cast<int>(n))).graph;
  }
  if (family == "brickcompose") {
    if (args.size() == 1) return compose(blueprint_from_json(Json::parse(read_file(args[0]), nullptr, false))).graph;
    need(2);
    std::int64_t seed = to_int(args[0], "seed"), k = to_int(args[1], "hyperedges");
    if (seed < 0 || k < 1) throw DomainError("generate brickcompose: invalid parameters");
    return compose(generate_blueprint(static_cast<std::uint64_t>(seed), static_cast<int>(k))).graph;
  }
  if (family == "randommindeg4") {
    need(3);
    std::int64_t seed = to_int(args[0], "seed"), n = to_int(args[1], "n"), m = to_int(args[2], "m");
    if (seed < 0 || n < 5 || m < 0) throw DomainError("generate randommindeg4: need n >= 5 and m >= 0");
    return random_min_degree4(static_cast<std::uint64_t>(seed), static_cast<int>(n), static_cast<int>(m));
  }
  if (family == "wheelsfamily") {
    need(2);
    std::int64_t k = to_int(args[0], "k"), l = to_int(args[1], "l");
    if (k < 1 || l < 3) throw DomainError("generate wheelsfamily: need k >= 1 and l >= 3");
    return wheels_family(static_cast<int>(k), static_cast<int>(l));
  }
  throw DomainError("unknown family " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonseparating induced wheel, prism and K33 subdivisions"};
  app.require_subcommand(1);
  std::function<int()> action;

  ExtractArgs ex;
  auto* extract_cmd = app.add_subcommand("extract", "Certificate avoiding a vertex");
  extract_cmd->add_option("graph", ex.graph, "Graph file (text or JSON)");
  extract_cmd->add_option("--avoid,-x", ex.avoid, "Vertex to avoid")->default_val(0);
  extract_cmd->add_option("--mode", ex.mode, "4conn or mindeg4")->check(CLI::IsMember({"4conn", "mindeg4"}));
  extract_cmd->add_option("--trace", ex.trace, "Write the reduction trace as JSON lines");
  extract_cmd->add_option("--dot", ex.dot, "Write a DOT rendering");
  extract_cmd->add_option("--batch", ex.batch, "Process every file of a directory");
  extract_cmd->add_flag("--k4", ex.k4, "Also return a spanning K4 subdivision");
  extract_cmd->callback([&] { action = [&] { return run_extract(ex); }; });

  std::string graph_file, cert_file, dot_file;
  std::optional<std::int64_t> avoid;
  bool json_out = false;

  auto* theta_cmd = app.add_subcommand("theta", "Nonseparating induced theta in a cubic graph");
  theta_cmd->add_option("graph", graph_file)->required();
  theta_cmd->add_option("--avoid,-x", avoid)->required();
  theta_cmd->add_option("--dot", dot_file);
  theta_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_file);
      SubdivisionCertificate c = find_theta(g, VertexId(*avoid));
      emit(certificate_to_json(c));
      if (!dot_file.empty()) write_file(dot_file, to_dot(g, c.vertex_set(), VertexId(*avoid)));
      return kOk;
    };
  });

  bool verify_k4 = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("graph", graph_file)->required();
  verify_cmd->add_option("certificate", cert_file)->required();
  verify_cmd->add_option("--avoid,-x", avoid);
  verify_cmd->add_flag("--k4", verify_k4, "The certificate is a K4 subdivision subgraph");
  verify_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_file);
      SubdivisionCertificate c = certificate_from_json(Json::parse(read_file(cert_file), nullptr, false));
      if (verify_k4) {
        if (!avoid) throw DomainError("verify --k4 needs --avoid");
        K4Report r = verify_k4_subgraph(g, c, VertexId(*avoid));
        emit(k4_report_to_json(r));
        return r.ok() ? kOk : kFailed;
      }
      std::optional<VertexId> x;
      if (avoid) x = VertexId(*avoid);
      VerificationReport r = verify_certificate(g, c, x);
      emit(report_to_json(r));
      return r.ok() ? kOk : kFailed;
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Brick decomposition of a minimal critical graph");
  decompose_cmd->add_option("graph", graph_file)->required();
  decompose_cmd->callback([&] {
    action = [&] {
      emit(decomposition_to_json(decompose(read_graph_file(graph_file))));
      return kOk;
    };
  });

  std::string blueprint_file;
  auto* compose_cmd = app.add_subcommand("compose", "Graph of a blueprint");
  compose_cmd->add_option("blueprint", blueprint_file)->required();
  compose_cmd->add_flag("--json", json_out);
  compose_cmd->callback([&] {
    action = [&] {
      emit_graph(compose(blueprint_from_json(Json::parse(read_file(blueprint_file), nullptr, false))).graph,
                 json_out);
      return kOk;
    };
  });

  bool oracle_all = false, oracle_every_pattern = false;
  std::size_t oracle_limit = 0, oracle_max = 14;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search");
  oracle_cmd->add_option("graph", graph_file)->required();
  oracle_cmd->add_option("--avoid,-x", avoid);
  oracle_cmd->add_flag("--all", oracle_all, "List every certificate");
  oracle_cmd->add_option("--limit", oracle_limit, "Stop after this many (with --all)");
  oracle_cmd->add_option("--max-vertices", oracle_max)->default_val(14);
  oracle_cmd->add_flag("--theta", oracle_every_pattern, "Also accept thetas");
  oracle_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_file);
      OracleOptions opts;
      opts.max_vertices = oracle_max;
      if (oracle_every_pattern) opts.patterns = PatternSet::all();
      std::optional<VertexId> x;
      if (avoid) x = VertexId(*avoid);
      std::size_t limit = oracle_all ? (oracle_limit ? oracle_limit : std::numeric_limits<std::size_t>::max()) : 1;
      auto found = oracle_enumerate(g, x, opts, limit);
      if (oracle_all) {
        Json a = Json::array();
        for (const auto& c : found) a.push_back(certificate_to_json(c));
        emit(a);
      } else if (!found.empty()) {
        emit(certificate_to_json(found.front()));
      } else {
        emit(nullptr);
      }
      return found.empty() ? kFailed : kOk;
    };
  });

  std::string family;
  std::vector<std::string> params;
  auto* generate_cmd = app.add_subcommand(
      "generate", "squarecycle L | lineofcubic SEED N | brickcompose (FILE | SEED K) | randommindeg4 SEED N M | "
                  "wheelsfamily K L");
  generate_cmd->add_option("family", family)->required();
  generate_cmd->add_option("params", params);
  generate_cmd->add_flag("--json", json_out);
  generate_cmd->add_option("--dot", dot_file);
  generate_cmd->callback([&] {
    action = [&] {
      Graph g = generate(family, params);
      emit_graph(g, json_out);
      if (!dot_file.empty()) write_file(dot_file, to_dot(g));
      return kOk;
    };
  });

  std::vector<std::int64_t> edge;
  std::string op = "contract";
  auto* lift_cmd = app.add_subcommand(
      "lift", "Lift a certificate of G/e or G-e back to G; a contracted vertex gets the smallest unused label");
  lift_cmd->add_option("graph", graph_file)->required();
  lift_cmd->add_option("--edge", edge)->expected(2)->required();
  lift_cmd->add_option("--op", op)->check(CLI::IsMember({"contract", "delete"}));
  lift_cmd->add_option("--cert", cert_file)->required();
  lift_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_file);
      Edge e{VertexId(edge[0]), VertexId(edge[1])};
      if (!g.has_edge(e)) throw DomainError("lift: the edge is not in G");
      SubdivisionCertificate h = certificate_from_json(Json::parse(read_file(cert_file), nullptr, false));
      LiftResult r;
      if (op == "contract") {
        Contraction c = contract_edge(g, e);
        r = lift_through_contraction(LiftContext{g, c.graph, ContractOp{e.u, e.v, c.merged}, h});
      } else {
        Graph gp = delete_edge(g, e);
        r = lift_through_deletion(LiftContext{g, gp, DeleteOp{e.u, e.v}, h});
      }
      emit({{"certificate", certificate_to_json(r.cert)}, {"branch", to_string(r.branch)}});
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}
