#include "nonsep/lifting.hpp"

#include <algorithm>
#include <array>

namespace nonsep {

NeighborClass classify_neighbors(const Graph& g, VertexId x, VertexId y, const VertexSet& v_neighbors) {
  if (!g.has_edge(x, y)) throw DomainError("classify_neighbors: x and y are not adjacent");
  NeighborClass out;
  for (VertexId w : v_neighbors) {
    bool to_x = g.has_edge(w, x), to_y = g.has_edge(w, y);
    if (to_x && to_y) {
      out[w] = NeighborKind::XY;
    } else if (to_x) {
      out[w] = NeighborKind::X;
    } else if (to_y) {
      out[w] = NeighborKind::Y;
    } else {
      throw DomainError("classify_neighbors: vertex " + std::to_string(w.value) + " sees neither x nor y");
    }
  }
  return out;
}

VertexSet LiftContext::lift_set() const {
  VertexSet s = h_prime.vertex_set();
  if (const auto* c = std::get_if<ContractOp>(&operation)) {
    if (s.erase(c->v)) {
      s.insert(c->x);
      s.insert(c->y);
    }
  }
  return s;
}

std::string to_string(LiftBranch b) {
  switch (b) {
    case LiftBranch::Unchanged: return "Unchanged";
    case LiftBranch::Case1AllXY: return "Case1AllXY";
    case LiftBranch::Case1NoY: return "Case1NoY";
    case LiftBranch::Case1NoX: return "Case1NoX";
    case LiftBranch::Case1Mixed: return "Case1Mixed";
    case LiftBranch::Case2K4Wheel: return "Case2K4Wheel";
    case LiftBranch::Case2K4Prism: return "Case2K4Prism";
    case LiftBranch::Case2K33: return "Case2K33";
    case LiftBranch::Case2PrismOnPartner: return "Case2PrismOnPartner";
    case LiftBranch::Case2PrismOnMate: return "Case2PrismOnMate";
    case LiftBranch::Case2WheelRim: return "Case2WheelRim";
    case LiftBranch::Case2WheelSpoke: return "Case2WheelSpoke";
    case LiftBranch::Case2WheelCenter: return "Case2WheelCenter";
    case LiftBranch::Case3Adjacent: return "Case3Adjacent";
    case LiftBranch::Case3Uniform: return "Case3Uniform";
    case LiftBranch::Case3Mixed: return "Case3Mixed";
    case LiftBranch::Case4NoY: return "Case4NoY";
    case LiftBranch::Case4OneY: return "Case4OneY";
    case LiftBranch::Case4Mixed: return "Case4Mixed";
    case LiftBranch::RunAll: return "RunAll";
    case LiftBranch::RunLong: return "RunLong";
    case LiftBranch::RunPrism: return "RunPrism";
    case LiftBranch::RunShort: return "RunShort";
    case LiftBranch::AlternatingK33: return "AlternatingK33";
    case LiftBranch::AlternatingK4: return "AlternatingK4";
    case LiftBranch::Chord: return "Chord";
    case LiftBranch::K33SameClass: return "K33SameClass";
    case LiftBranch::K33Internal: return "K33Internal";
    case LiftBranch::PrismPrincipal: return "PrismPrincipal";
    case LiftBranch::PrismTriangle: return "PrismTriangle";
    case LiftBranch::PrismMatching: return "PrismMatching";
    case LiftBranch::WheelRimLong: return "WheelRimLong";
    case LiftBranch::WheelRimShort: return "WheelRimShort";
    case LiftBranch::WheelDisjointPaths: return "WheelDisjointPaths";
    case LiftBranch::WheelCenter: return "WheelCenter";
    case LiftBranch::WheelSpoke: return "WheelSpoke";
  }
  return "";
}

std::string branch_group(LiftBranch b) {
  switch (b) {
    case LiftBranch::Unchanged: return "unchanged";
    case LiftBranch::Case1AllXY:
    case LiftBranch::Case1NoY:
    case LiftBranch::Case1NoX:
    case LiftBranch::Case1Mixed: return "contract/case1";
    case LiftBranch::Case2K4Wheel:
    case LiftBranch::Case2K4Prism:
    case LiftBranch::Case2K33:
    case LiftBranch::Case2PrismOnPartner:
    case LiftBranch::Case2PrismOnMate:
    case LiftBranch::Case2WheelRim:
    case LiftBranch::Case2WheelSpoke:
    case LiftBranch::Case2WheelCenter: return "contract/case2";
    case LiftBranch::Case3Adjacent:
    case LiftBranch::Case3Uniform:
    case LiftBranch::Case3Mixed: return "contract/case3";
    case LiftBranch::Case4NoY:
    case LiftBranch::Case4OneY:
    case LiftBranch::Case4Mixed: return "contract/case4";
    case LiftBranch::RunAll:
    case LiftBranch::RunLong:
    case LiftBranch::RunPrism:
    case LiftBranch::RunShort: return "contract/runs";
    case LiftBranch::AlternatingK33:
    case LiftBranch::AlternatingK4: return "contract/alternating";
    case LiftBranch::Chord: return "delete/chord";
    case LiftBranch::K33SameClass:
    case LiftBranch::K33Internal: return "delete/k33";
    case LiftBranch::PrismPrincipal:
    case LiftBranch::PrismTriangle:
    case LiftBranch::PrismMatching: return "delete/prism";
    case LiftBranch::WheelRimLong:
    case LiftBranch::WheelRimShort:
    case LiftBranch::WheelDisjointPaths:
    case LiftBranch::WheelCenter:
    case LiftBranch::WheelSpoke: return "delete/wheel";
  }
  return "";
}

namespace {

void erase_all(VertexSet& s, const VertexSet& t) {
  for (VertexId v : t) s.erase(v);
}

void insert_all(VertexSet& s, const std::vector<VertexId>& t) { s.insert(t.begin(), t.end()); }

void check_common(const LiftContext& ctx, const char* who) {
  if (ctx.g.min_degree() < 4 || ctx.g_prime.min_degree() < 4) {
    throw DomainError(std::string(who) + ": both graphs need minimum degree 4");
  }
  if (!PatternSet::theorem().allows(ctx.h_prime.pattern)) {
    throw DomainError(std::string(who) + ": H' must be a wheel, prism or K33 subdivision");
  }
  if (!verify_certificate(ctx.g_prime, ctx.h_prime, std::nullopt).ok()) {
    throw DomainError(std::string(who) + ": H' is not a nonseparating induced subdivision of G'");
  }
}

LiftResult finish(const LiftContext& ctx, const VertexSet& t, LiftBranch branch, const char* who) {
  const VertexSet allowed = ctx.lift_set();
  if (!std::includes(allowed.begin(), allowed.end(), t.begin(), t.end())) {
    throw InvariantViolation(std::string(who) + ": " + to_string(branch) + " left the allowed vertex set");
  }
  auto cert = recognize_induced_subdivision(ctx.g, t, PatternSet::theorem());
  if (!cert || !verify_certificate(ctx.g, *cert, std::nullopt).ok()) {
    throw InvariantViolation(std::string(who) + ": " + to_string(branch) +
                             " did not yield a nonseparating induced subdivision");
  }
  return {*cert, branch};
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// Rim helpers for wheels: pattern rim indices are 1..l.
int rim_index(int l, int i) { return 1 + mod(i - 1, l); }

/// Vertices after a rotation/reflection of the rim: p_i = rim_index(l, base + dir * i).
struct RimFrame {
  int l;
  int base;
  int dir;
  int at(int i) const { return rim_index(l, base + dir * i); }
};

/// S_i = S - (rim interiors (p_j, p_{j+1}) for j = i..l-1) - (spokes (v, p_j] for j = i+1..l-1).
VertexSet s_index(const SubdivisionCertificate& h, const VertexSet& s, const RimFrame& f, int i) {
  VertexSet out = s;
  for (int j = i; j <= f.l - 1; ++j) erase_all(out, open_path(h, f.at(j), f.at(j + 1)));
  for (int j = i + 1; j <= f.l - 1; ++j) erase_all(out, half_open_path(h, 0, f.at(j)));
  return out;
}

LiftResult contraction_wheel_center(const LiftContext& ctx, const ContractOp& op, const VertexSet& s,
                                    const NeighborClass& cls) {
  const auto& h = ctx.h_prime;
  const char* who = "lift_through_contraction";
  if (h.pattern.kind != PatternKind::Wheel || h.pattern.rim < 4 || h.branch[0] != op.v) {
    throw InvariantViolation("lift_through_contraction: high-degree v must be a wheel center");
  }
  const int l = h.pattern.rim;
  // kind[j] for rim vertex p_j = rim index j+1.
  std::vector<NeighborKind> kind(l);
  for (int j = 0; j < l; ++j) kind[j] = cls.at(first_step(h, 0, j + 1));
  auto other_of = [&](NeighborKind k) { return k == NeighborKind::X ? op.y : op.x; };

  std::vector<int> xy;
  int nx = 0, ny = 0;
  for (int j = 0; j < l; ++j) {
    if (kind[j] == NeighborKind::XY) xy.push_back(j);
    nx += kind[j] == NeighborKind::X;
    ny += kind[j] == NeighborKind::Y;
  }

  if (xy.size() >= 2) {
    int best_start = -1, best_gap = l + 1;
    for (std::size_t t = 0; t < xy.size(); ++t) {
      int start = xy[t];
      int gap = mod(xy[(t + 1) % xy.size()] - start, l);
      if (gap < best_gap) {
        best_gap = gap;
        best_start = start;
      }
    }
    RimFrame f{l, best_start + 1, 1};
    const int k = best_gap;
    auto kind_at = [&](int i) { return kind[mod(best_start + i, l)]; };
    if (k == 1) return finish(ctx, s_index(h, s, f, 1), LiftBranch::Case3Adjacent, who);
    bool uniform = true;
    for (int i = 1; i < k; ++i) uniform = uniform && kind_at(i) == kind_at(1);
    if (uniform) return finish(ctx, s_index(h, s, f, k), LiftBranch::Case3Uniform, who);
    int i = 1;
    while (kind_at(i) == kind_at(1)) ++i;
    return finish(ctx, s_index(h, s, f, i), LiftBranch::Case3Mixed, who);
  }

  if (xy.size() == 1) {
    const int start = xy[0];
    RimFrame f{l, start + 1, 1};
    auto kind_at = [&](int i) { return kind[mod(start + i, l)]; };
    if (ny == 0 || nx == 0) {
      VertexSet t = s;
      t.erase(ny == 0 ? op.y : op.x);
      return finish(ctx, t, LiftBranch::Case4NoY, who);
    }
    if (ny == 1 || nx == 1) {
      NeighborKind lone = ny == 1 ? NeighborKind::Y : NeighborKind::X;
      VertexSet t = s;
      for (int j = 0; j < l; ++j) {
        if (kind[j] == lone) erase_all(t, open_path(h, 0, j + 1));
      }
      t.erase(lone == NeighborKind::Y ? op.y : op.x);
      return finish(ctx, t, LiftBranch::Case4OneY, who);
    }
    int i = 1;
    while (kind_at(i) == kind_at(1)) ++i;
    return finish(ctx, s_index(h, s, f, i), LiftBranch::Case4Mixed, who);
  }

  if (nx == 0 || ny == 0) {
    VertexSet t = s;
    t.erase(other_of(nx == 0 ? NeighborKind::Y : NeighborKind::X));
    return finish(ctx, t, LiftBranch::RunAll, who);
  }
  // Maximal circular runs of equal kinds; both kinds occur here.
  int anchor = 0;
  while (kind[anchor] == kind[mod(anchor - 1, l)]) ++anchor;
  int best_start = -1, best_len = l + 1;
  for (int i = 0; i < l;) {
    int start = mod(anchor + i, l);
    int len = 1;
    while (i + len < l && kind[mod(anchor + i + len, l)] == kind[start]) ++len;
    if (len >= 2 && (len < best_len || (len == best_len && start < best_start))) {
      best_len = len;
      best_start = start;
    }
    i += len;
  }
  if (best_start >= 0) {
    const int k = best_len;
    if (k == l - 1) return finish(ctx, s, LiftBranch::RunLong, who);
    if (k == l - 2) return finish(ctx, s, LiftBranch::RunPrism, who);
    RimFrame f{l, best_start, 1};  // run occupies p_1..p_k
    return finish(ctx, s_index(h, s, f, k + 1), LiftBranch::RunShort, who);
  }
  if (l == 4) return finish(ctx, s, LiftBranch::AlternatingK33, who);
  RimFrame f{l, 1, 1};
  return finish(ctx, s_index(h, s, f, 3), LiftBranch::AlternatingK4, who);
}

LiftResult contraction_case2(const LiftContext& ctx, const ContractOp& op, const VertexSet& s, VertexId a,
                             VertexId b, VertexId c) {
  const auto& h = ctx.h_prime;
  const char* who = "lift_through_contraction";
  auto loc = locate(h, op.v);
  if (!loc || loc->branch < 0) throw InvariantViolation("lift_through_contraction: degree-3 v is not principal");
  const int vi = loc->branch;
  auto target = [&](VertexId w) { return path_target(h, vi, w); };

  switch (h.pattern.kind) {
    case PatternKind::Wheel:
      if (h.pattern.rim == 3) {
        bool principal = h.branch[target(c)] == c;
        return finish(ctx, s, principal ? LiftBranch::Case2K4Wheel : LiftBranch::Case2K4Prism, who);
      } else {
        const int l = h.pattern.rim;
        const int tc = target(c);
        if (tc == 0 && h.branch[0] == c) return finish(ctx, s, LiftBranch::Case2WheelCenter, who);
        int dir = 1;
        if (tc != 0) dir = tc == rim_index(l, vi + 1) ? 1 : -1;
        RimFrame f{l, vi, dir};
        VertexSet t = s;
        for (int j = 1; j <= l - 2; ++j) erase_all(t, open_path(h, f.at(j), f.at(j + 1)));
        for (int j = 2; j <= l - 2; ++j) erase_all(t, half_open_path(h, 0, f.at(j)));
        return finish(ctx, t, tc != 0 ? LiftBranch::Case2WheelRim : LiftBranch::Case2WheelSpoke, who);
      }
    case PatternKind::K33: {
      const int own = vi < 3 ? 0 : 3;
      const int other = 3 - own;
      int si = own;
      while (si == vi) ++si;
      VertexSet t = s;
      t.erase(h.branch[si]);
      for (int j = other; j < other + 3; ++j) erase_all(t, open_path(h, si, j));
      return finish(ctx, t, LiftBranch::Case2K33, who);
    }
    case PatternKind::Prism: {
      auto partner = [](int i) { return i < 3 ? i + 3 : i - 3; };
      auto mates = [](int i) {
        int base = i < 3 ? 0 : 3;
        std::array<int, 2> m{};
        int k = 0;
        for (int j = base; j < base + 3; ++j) {
          if (j != i) m[k++] = j;
        }
        return m;
      };
      const int r = partner(vi);
      const int tc = target(c);
      int p, q;
      LiftBranch branch;
      if (tc == r) {
        p = target(a);
        q = target(b);
        branch = LiftBranch::Case2PrismOnPartner;
      } else {
        p = tc;
        auto m = mates(vi);
        q = m[0] == p ? m[1] : m[0];
        branch = LiftBranch::Case2PrismOnMate;
      }
      const int si = partner(p), ti = partner(q);
      VertexSet t = s;
      t.erase(h.branch[si]);
      erase_all(t, open_path(h, si, ti));
      erase_all(t, open_path(h, si, r));
      erase_all(t, open_path(h, si, p));
      return finish(ctx, t, branch, who);
    }
    case PatternKind::Theta:
      break;
  }
  throw InvariantViolation("lift_through_contraction: unexpected pattern");
}

// Deletion helpers.

struct RimPos {
  bool on_rim = false;
  int seg = 0;  // 0-based: vertex lies in [b_seg, b_seg+1) of the rim
};

RimPos rim_position(const SubdivisionCertificate& w, VertexId z) {
  const int l = w.pattern.rim;
  auto loc = locate(w, z);
  if (!loc) return {};
  if (loc->branch >= 1) return {true, loc->branch - 1};
  if (loc->path >= l) return {true, loc->path - l};
  return {};
}

/// Part of the path from branch i to branch j, from `from` (inclusive) to `to` (inclusive).
std::vector<VertexId> subpath(const SubdivisionCertificate& w, int i, int j, VertexId from, VertexId to) {
  auto p = oriented_path(w, i, j);
  auto s = std::find(p.begin(), p.end(), from);
  auto e = std::find(p.begin(), p.end(), to);
  if (s == p.end() || e == p.end() || s > e) throw InvariantViolation("lift_through_deletion: bad subpath");
  return {s, e + 1};
}

std::optional<VertexSet> wheel_rim_case(const SubdivisionCertificate& w, VertexId x, VertexId y,
                                        LiftBranch& branch) {
  const int l = w.pattern.rim;
  RimPos px = rim_position(w, x), py = rim_position(w, y);
  if (!px.on_rim || !py.on_rim) return std::nullopt;
  int k = mod(py.seg - px.seg, l);
  if (k < 2) {
    std::swap(x, y);
    std::swap(px, py);
    k = mod(py.seg - px.seg, l);
  }
  if (k < 2) throw InvariantViolation("lift_through_deletion: rim vertices on a common path");
  RimFrame f{l, px.seg + 1, 1};
  VertexSet t;
  if (k > 2) {
    for (int j = 1; j <= k; ++j) insert_all(t, oriented_path(w, 0, f.at(j)));
    for (int j = 1; j <= k - 1; ++j) insert_all(t, oriented_path(w, f.at(j), f.at(j + 1)));
    insert_all(t, subpath(w, f.at(0), f.at(1), x, w.branch[f.at(1)]));
    insert_all(t, subpath(w, f.at(k), f.at(k + 1), w.branch[f.at(k)], y));
    branch = LiftBranch::WheelRimLong;
  } else {
    for (int j = 0; j <= 2; ++j) insert_all(t, oriented_path(w, 0, f.at(j)));
    insert_all(t, oriented_path(w, f.at(0), f.at(1)));
    insert_all(t, oriented_path(w, f.at(1), f.at(2)));
    insert_all(t, subpath(w, f.at(2), f.at(3), w.branch[f.at(2)], y));
    branch = LiftBranch::WheelRimShort;
  }
  return t;
}

/// The same K4 subdivision presented as a wheel with center c.
SubdivisionCertificate recenter_k4(const SubdivisionCertificate& k4, int c) {
  std::vector<int> order{c};
  for (int i = 0; i < 4; ++i) {
    if (i != c) order.push_back(i);
  }
  SubdivisionCertificate out{PatternType::k4(), {}, {}};
  for (int i : order) out.branch.push_back(k4.branch[i]);
  for (auto [i, j] : out.pattern.edges()) out.paths.push_back(oriented_path(k4, order[i], order[j]));
  return out;
}

}  // namespace

LiftResult lift_through_contraction(const LiftContext& ctx) {
  const char* who = "lift_through_contraction";
  const auto* op = std::get_if<ContractOp>(&ctx.operation);
  if (!op) throw DomainError("lift_through_contraction: operation is not a contraction");
  if (!ctx.g.has_edge(op->x, op->y)) throw DomainError("lift_through_contraction: xy is not an edge of G");
  check_common(ctx, who);
  if (contract_edge(ctx.g, Edge(op->x, op->y), op->v).graph != ctx.g_prime) {
    throw DomainError("lift_through_contraction: G' is not G / xy");
  }
  const auto& h = ctx.h_prime;
  const VertexSet hv = h.vertex_set();
  if (!hv.count(op->v)) return finish(ctx, hv, LiftBranch::Unchanged, who);

  const VertexSet s = ctx.lift_set();
  VertexSet n;
  for (VertexId w : ctx.g_prime.neighbors(op->v)) {
    if (hv.count(w)) n.insert(w);
  }
  const NeighborClass cls = classify_neighbors(ctx.g, op->x, op->y, n);
  int nx = 0, ny = 0, nxy = 0;
  std::optional<VertexId> a, b, c;
  for (const auto& [w, k] : cls) {
    if (k == NeighborKind::X) {
      nx++;
      a = w;
    } else if (k == NeighborKind::Y) {
      ny++;
      b = w;
    } else {
      nxy++;
      c = w;
    }
  }

  if (n.size() <= 3 && (nx == 0 || ny == 0 || nxy == 0)) {
    VertexSet t = s;
    if (nx == 0 && ny == 0) {
      bool x_out = false;
      for (VertexId w : ctx.g.neighbors(op->x)) x_out = x_out || !s.count(w);
      t.erase(x_out ? op->x : op->y);
      return finish(ctx, t, LiftBranch::Case1AllXY, who);
    }
    if (ny == 0) {
      t.erase(op->y);
      return finish(ctx, t, LiftBranch::Case1NoY, who);
    }
    if (nx == 0) {
      t.erase(op->x);
      return finish(ctx, t, LiftBranch::Case1NoX, who);
    }
    return finish(ctx, t, LiftBranch::Case1Mixed, who);
  }
  if (n.size() == 3) return contraction_case2(ctx, *op, s, *a, *b, *c);
  return contraction_wheel_center(ctx, *op, s, cls);
}

LiftResult lift_through_deletion(const LiftContext& ctx) {
  const char* who = "lift_through_deletion";
  const auto* op = std::get_if<DeleteOp>(&ctx.operation);
  if (!op) throw DomainError("lift_through_deletion: operation is not a deletion");
  if (!ctx.g.has_edge(op->x, op->y)) throw DomainError("lift_through_deletion: xy is not an edge of G");
  check_common(ctx, who);
  if (delete_edge(ctx.g, Edge(op->x, op->y)) != ctx.g_prime) {
    throw DomainError("lift_through_deletion: G' is not G - xy");
  }
  const auto& h = ctx.h_prime;
  const VertexSet hv = h.vertex_set();
  const VertexId x = op->x, y = op->y;
  if (!hv.count(x) || !hv.count(y)) return finish(ctx, hv, LiftBranch::Unchanged, who);

  for (const auto& p : h.paths) {
    auto ix = std::find(p.begin(), p.end(), x), iy = std::find(p.begin(), p.end(), y);
    if (ix == p.end() || iy == p.end()) continue;
    if (ix > iy) std::swap(ix, iy);
    VertexSet t = hv;
    for (auto it = ix + 1; it != iy; ++it) t.erase(*it);
    return finish(ctx, t, LiftBranch::Chord, who);
  }

  const auto lx = *locate(h, x), ly = *locate(h, y);
  auto interior_of = [&](const PathLocation& loc) {
    const auto& p = h.paths[loc.path];
    return VertexSet(p.begin() + 1, p.end() - 1);
  };

  switch (h.pattern.kind) {
    case PatternKind::K33: {
      if (lx.branch >= 0 && ly.branch >= 0) {
        const int other = lx.branch < 3 ? 3 : 0;
        const int own = 3 - other;
        VertexSet t = hv;
        t.erase(h.branch[other]);
        for (int j = own; j < own + 3; ++j) erase_all(t, open_path(h, other, j));
        return finish(ctx, t, LiftBranch::K33SameClass, who);
      }
      VertexSet t = hv;
      erase_all(t, interior_of(lx.branch < 0 ? lx : ly));
      return finish(ctx, t, LiftBranch::K33Internal, who);
    }
    case PatternKind::Prism: {
      auto partner = [](int i) { return i < 3 ? i + 3 : i - 3; };
      if (lx.branch >= 0 && ly.branch >= 0) {
        const int p = partner(lx.branch);
        VertexSet t = hv;
        t.erase(h.branch[p]);
        const int base = p < 3 ? 0 : 3;
        erase_all(t, open_path(h, p, lx.branch));
        for (int j = base; j < base + 3; ++j) {
          if (j != p) erase_all(t, open_path(h, p, j));
        }
        return finish(ctx, t, LiftBranch::PrismPrincipal, who);
      }
      for (const PathLocation* loc : {&lx, &ly}) {
        if (loc->branch < 0 && loc->path < 6) {
          VertexSet t = hv;
          erase_all(t, interior_of(*loc));
          return finish(ctx, t, LiftBranch::PrismTriangle, who);
        }
      }
      // Both lie on matching paths (at most one of them principal).
      VertexId px = x, py = y;
      PathLocation qx = lx, qy = ly;
      if (qy.branch >= 0 || (qx.branch < 0 && qy.branch < 0 && py < px)) {
        std::swap(px, py);
        std::swap(qx, qy);
      }
      // px is principal or interior of a matching path; py is interior of another one.
      int a;
      if (qx.branch >= 0) {
        a = partner(qx.branch);
      } else {
        a = qx.path - 6;
      }
      const int j0 = qy.path - 6;
      const int b_idx = a < 3 ? j0 : j0 + 3;
      const int base = a < 3 ? 0 : 3;
      int c_idx = base;
      while (c_idx == a || c_idx == b_idx) ++c_idx;
      VertexSet t = hv;
      auto to_x = oriented_path(h, a, partner(a));
      for (VertexId w : to_x) {
        if (w == px) break;
        t.erase(w);
      }
      erase_all(t, open_path(h, a, b_idx));
      erase_all(t, open_path(h, a, c_idx));
      return finish(ctx, t, LiftBranch::PrismMatching, who);
    }
    case PatternKind::Wheel: {
      const int l = h.pattern.rim;
      if (l == 3) {
        for (int c = 0; c < 4; ++c) {
          SubdivisionCertificate w = recenter_k4(h, c);
          LiftBranch branch;
          if (auto t = wheel_rim_case(w, x, y, branch)) return finish(ctx, *t, branch, who);
        }
        return finish(ctx, hv, LiftBranch::WheelDisjointPaths, who);
      }
      LiftBranch branch;
      if (auto t = wheel_rim_case(h, x, y, branch)) return finish(ctx, *t, branch, who);
      if (x == h.branch[0] || y == h.branch[0]) return finish(ctx, hv, LiftBranch::WheelCenter, who);
      const PathLocation& spoke = (lx.branch < 0 && lx.path < l) ? lx : ly;
      VertexSet t = hv;
      erase_all(t, interior_of(spoke));
      return finish(ctx, t, LiftBranch::WheelSpoke, who);
    }
    case PatternKind::Theta:
      break;
  }
  throw InvariantViolation("lift_through_deletion: unexpected pattern");
}

LiftResult lift(const LiftContext& ctx) {
  if (std::holds_alternative<ContractOp>(ctx.operation)) return lift_through_contraction(ctx);
  return lift_through_deletion(ctx);
}

}  // namespace nonsep
