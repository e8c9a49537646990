#include "nonsep/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nonsep {

namespace {

VertexId label(const Json& j) {
  if (!j.is_number_integer()) throw DomainError("expected an integer vertex label");
  return VertexId(j.get<std::int64_t>());
}

std::vector<VertexId> labels(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of vertex labels");
  std::vector<VertexId> out;
  for (const Json& v : j) out.push_back(label(v));
  return out;
}

Json to_array(const std::vector<VertexId>& vs) {
  Json a = Json::array();
  for (VertexId v : vs) a.push_back(v.value);
  return a;
}

Json to_array(const VertexSet& vs) { return to_array(std::vector<VertexId>(vs.begin(), vs.end())); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::int64_t> nums;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw DomainError("graph text: not an integer: " + tok);
      nums.push_back(v);
    }
  }
  if (nums.size() < 2) throw DomainError("graph text: missing header `n m`");
  const std::int64_t n = nums[0], m = nums[1];
  if (n < 0 || m < 0) throw DomainError("graph text: negative counts");
  if (static_cast<std::int64_t>(nums.size()) != 2 + 2 * m) throw DomainError("graph text: edge count mismatch");
  Graph g;
  for (std::int64_t i = 0; i < n; ++i) g.add_vertex(VertexId(i));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t a = nums[2 + 2 * i], b = nums[3 + 2 * i];
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("graph text: label out of range");
    if (a == b) throw DomainError("graph text: loop at " + std::to_string(a));
    if (g.has_edge(VertexId(a), VertexId(b))) {
      throw DomainError("graph text: repeated edge " + std::to_string(a) + " " + std::to_string(b));
    }
    g.add_edge(VertexId(a), VertexId(b));
  }
  return g;
}

std::string format_graph_text(const Graph& g) {
  std::int64_t i = 0;
  for (VertexId v : g.vertices()) {
    if (v.value != i++) throw DomainError("graph text: labels must be 0..n-1");
  }
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u.value << ' ' << e.v.value << '\n';
  return out.str();
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u.value, e.v.value});
  return {{"vertices", to_array(g.vertices())}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph json", [&] {
    Graph g;
    for (VertexId v : labels(field(j, "vertices"))) g.add_vertex(v);
    for (const Json& e : field(j, "edges")) {
      auto ends = labels(e);
      if (ends.size() != 2) throw DomainError("graph json: an edge needs two ends");
      if (!g.has_vertex(ends[0]) || !g.has_vertex(ends[1])) throw DomainError("graph json: unknown edge end");
      if (ends[0] == ends[1]) throw DomainError("graph json: loop");
      if (g.has_edge(ends[0], ends[1])) throw DomainError("graph json: repeated edge");
      g.add_edge(ends[0], ends[1]);
    }
    return g;
  });
}

Graph parse_graph(std::string_view content) {
  auto pos = content.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && content[pos] == '{') {
    return graph_from_json(guarded("graph json", [&] { return Json::parse(content); }));
  }
  return parse_graph_text(content);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << content;
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Json certificate_to_json(const SubdivisionCertificate& c) {
  Json j;
  j["pattern"] = c.pattern.tag();
  if (c.pattern.kind == PatternKind::Wheel) j["l"] = c.pattern.rim;
  Json branch = Json::object();
  for (std::size_t i = 0; i < c.branch.size(); ++i) branch[std::to_string(i)] = c.branch[i].value;
  j["branch"] = branch;
  Json paths = Json::array();
  for (const auto& p : c.paths) paths.push_back(to_array(p));
  j["paths"] = paths;
  return j;
}

SubdivisionCertificate certificate_from_json(const Json& j) {
  return guarded("certificate json", [&] {
    SubdivisionCertificate c;
    std::string tag = field(j, "pattern").get<std::string>();
    if (tag == "wheel") {
      int l = field(j, "l").get<int>();
      if (l < 3) throw DomainError("certificate json: wheel length below 3");
      c.pattern = PatternType::wheel(l);
    } else if (tag == "prism") {
      c.pattern = PatternType::prism();
    } else if (tag == "k33") {
      c.pattern = PatternType::k33();
    } else if (tag == "theta") {
      c.pattern = PatternType::theta();
    } else {
      throw DomainError("certificate json: unknown pattern " + tag);
    }
    const Json& branch = field(j, "branch");
    const int n = c.pattern.vertex_count();
    if (!branch.is_object() || static_cast<int>(branch.size()) != n) {
      throw DomainError("certificate json: expected " + std::to_string(n) + " branch vertices");
    }
    for (int i = 0; i < n; ++i) c.branch.push_back(label(field(branch, std::to_string(i).c_str())));
    const Json& paths = field(j, "paths");
    if (!paths.is_array() || paths.size() != c.pattern.edges().size()) {
      throw DomainError("certificate json: expected " + std::to_string(c.pattern.edges().size()) + " paths");
    }
    for (const Json& p : paths) {
      c.paths.push_back(labels(p));
      if (c.paths.back().size() < 2) throw DomainError("certificate json: a path needs two ends");
    }
    return c;
  });
}

Json report_to_json(const VerificationReport& r) {
  Json j{{"induced", r.induced},
         {"pattern_ok", r.pattern_ok},
         {"nonseparating", r.nonseparating},
         {"avoids_x", r.avoids_x},
         {"ok", r.ok()}};
  if (r.witness) j["witness"] = {{"kind", r.witness->kind}, {"vertices", to_array(r.witness->vertices)}};
  return j;
}

VerificationReport report_from_json(const Json& j) {
  return guarded("report json", [&] {
    VerificationReport r;
    r.induced = field(j, "induced").get<bool>();
    r.pattern_ok = field(j, "pattern_ok").get<bool>();
    r.nonseparating = field(j, "nonseparating").get<bool>();
    r.avoids_x = field(j, "avoids_x").get<bool>();
    if (j.contains("witness")) {
      r.witness = Witness{field(j["witness"], "kind").get<std::string>(), labels(field(j["witness"], "vertices"))};
    }
    return r;
  });
}

Json k4_report_to_json(const K4Report& r) {
  return {{"is_k4_subdivision", r.is_k4_subdivision},
          {"nonseparating", r.nonseparating},
          {"avoids_x", r.avoids_x},
          {"ok", r.ok()}};
}

namespace {

std::string brick_tag(BrickType t) { return lower(to_string(t)); }

BrickType brick_from_tag(const Json& j) {
  std::string s = lower(j.get<std::string>());
  for (BrickType t : kAllBrickTypes) {
    if (brick_tag(t) == s) return t;
  }
  throw DomainError("unknown brick type " + j.get<std::string>());
}

}  // namespace

Json blueprint_to_json(const Blueprint& bp) {
  VertexSet hv;
  Json es = Json::array();
  for (const BlueprintEdge& e : bp.hyperedges) {
    hv.insert(e.vertices.begin(), e.vertices.end());
    es.push_back({{"vertices", to_array(e.vertices)}, {"brick", brick_tag(e.type)}});
  }
  return {{"hvertices", to_array(hv)}, {"hyperedges", es}};
}

Blueprint blueprint_from_json(const Json& j) {
  return guarded("blueprint json", [&] {
    Blueprint bp;
    std::optional<VertexSet> declared;
    if (j.contains("hvertices")) {
      auto hv = labels(j["hvertices"]);
      declared = VertexSet(hv.begin(), hv.end());
    }
    for (const Json& e : field(j, "hyperedges")) {
      BlueprintEdge be{brick_from_tag(field(e, "brick")), labels(field(e, "vertices"))};
      for (VertexId v : be.vertices) {
        if (declared && !declared->count(v)) throw DomainError("blueprint json: undeclared hypergraph vertex");
      }
      bp.hyperedges.push_back(std::move(be));
    }
    return bp;
  });
}

Json decomposition_to_json(const Decomposition& d) {
  if (const auto* sq = std::get_if<SquareOfCycle>(&d)) return {{"square_of_cycle", to_array(sq->order)}};
  const auto& dec = std::get<BrickDecomposition>(d);
  Json es = Json::array();
  for (const Brick& b : dec.bricks) {
    auto map = model_map(b);
    if (!map) throw InvariantViolation("decomposition json: brick does not match its model");
    Json m = Json::object();
    for (const auto& [from, to] : *map) m[std::to_string(from.value)] = to.value;
    es.push_back({{"vertices", to_array(b.attachments)},
                  {"brick", brick_tag(b.type)},
                  {"inner", to_array(b.inner)},
                  {"map", m}});
  }
  return {{"hvertices", to_array(dec.hypergraph_vertices())}, {"hyperedges", es}};
}

Decomposition decomposition_from_json(const Json& j) {
  return guarded("decomposition json", [&]() -> Decomposition {
    if (j.contains("square_of_cycle")) return SquareOfCycle{labels(j["square_of_cycle"])};
    BrickDecomposition dec;
    for (const Json& e : field(j, "hyperedges")) {
      BrickType t = brick_from_tag(field(e, "brick"));
      Brick model = make_brick(t);
      std::map<VertexId, VertexId> map;
      const Json& m = field(e, "map");
      for (VertexId v : model.vertex_set()) map[v] = label(field(m, std::to_string(v.value).c_str()));
      Brick b{t, {}, {}, {}};
      for (VertexId a : model.attachments) b.attachments.push_back(map.at(a));
      for (VertexId v : model.inner) b.inner.insert(map.at(v));
      for (const Edge& ed : model.edges) b.edges.emplace_back(map.at(ed.u), map.at(ed.v));
      std::sort(b.edges.begin(), b.edges.end());
      auto listed = labels(field(e, "vertices"));
      if (!std::is_permutation(listed.begin(), listed.end(), b.attachments.begin(), b.attachments.end())) {
        throw DomainError("decomposition json: map disagrees with the attachment list");
      }
      b.attachments = listed;
      dec.bricks.push_back(std::move(b));
    }
    return dec;
  });
}

Json step_to_json(const ReductionStep& s) {
  Json j{{"kind", to_string(s.kind)},
         {"before", {{"n", s.before_vertices}, {"m", s.before_edges}}},
         {"after", {{"n", s.after_vertices}, {"m", s.after_edges}}},
         {"avoid_before", s.avoid_before.value},
         {"avoid_after", s.avoid_after.value},
         {"lift", s.lift}};
  if (!s.surgery.empty()) j["surgery"] = s.surgery;
  if (s.edge) j["edge"] = {s.edge->u.value, s.edge->v.value};
  if (s.merged) j["merged"] = s.merged->value;
  if (s.after) j["graph"] = graph_to_json(*s.after);
  return j;
}

ReductionStep step_from_json(const Json& j) {
  return guarded("step json", [&] {
    ReductionStep s;
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "DeleteEdge") {
      s.kind = ReductionKind::DeleteEdge;
    } else if (kind == "ContractEdge") {
      s.kind = ReductionKind::ContractEdge;
    } else if (kind == "BrickSurgery") {
      s.kind = ReductionKind::BrickSurgery;
    } else {
      throw DomainError("step json: unknown kind " + kind);
    }
    s.before_vertices = field(field(j, "before"), "n").get<std::size_t>();
    s.before_edges = field(field(j, "before"), "m").get<std::size_t>();
    s.after_vertices = field(field(j, "after"), "n").get<std::size_t>();
    s.after_edges = field(field(j, "after"), "m").get<std::size_t>();
    s.avoid_before = label(field(j, "avoid_before"));
    s.avoid_after = label(field(j, "avoid_after"));
    s.lift = field(j, "lift").get<std::string>();
    if (j.contains("surgery")) s.surgery = j["surgery"].get<std::string>();
    if (j.contains("edge")) {
      auto e = labels(j["edge"]);
      if (e.size() != 2) throw DomainError("step json: an edge needs two ends");
      s.edge = Edge(e[0], e[1]);
    }
    if (j.contains("merged")) s.merged = label(j["merged"]);
    if (j.contains("graph")) s.after = graph_from_json(j["graph"]);
    return s;
  });
}

std::string trace_to_jsonl(const ReductionTrace& t) {
  std::string out;
  for (const ReductionStep& s : t.steps) out += step_to_json(s).dump() + "\n";
  out += Json{{"terminal", to_string(t.terminal)}, {"detail", t.terminal_detail}}.dump() + "\n";
  return out;
}

ReductionTrace trace_from_jsonl(std::string_view text) {
  ReductionTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (ended) throw DomainError("trace: lines after the terminal line");
    Json j = guarded("trace", [&] { return Json::parse(line); });
    if (j.contains("terminal")) {
      std::string term = guarded("trace", [&] { return j["terminal"].get<std::string>(); });
      if (term == "SquareOfCycle") {
        t.terminal = TerminalCase::SquareOfCycle;
      } else if (term == "LineOfCubic") {
        t.terminal = TerminalCase::LineOfCubic;
      } else if (term == "BrickCase") {
        t.terminal = TerminalCase::BrickCase;
      } else {
        throw DomainError("trace: unknown terminal " + term);
      }
      t.terminal_detail = guarded("trace", [&] { return j.value("detail", std::string()); });
      ended = true;
    } else {
      t.steps.push_back(step_from_json(j));
    }
  }
  if (!ended) throw DomainError("trace: missing terminal line");
  return t;
}

std::string to_dot(const Graph& g, const VertexSet& highlight, std::optional<VertexId> x) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v.value;
    if (x && v == *x) {
      out << " [shape=box, color=red]";
    } else if (highlight.count(v)) {
      out << " [style=filled, fillcolor=lightblue]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u.value << " -- " << e.v.value;
    if (highlight.count(e.u) && highlight.count(e.v)) out << " [penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nonsep
