#include "nonsep/oracle.hpp"

#include <bit>
#include <cstdint>

namespace nonsep {

namespace {

using Mask = std::uint64_t;

bool connected_mask(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

template <typename Visit>
void scan(const Graph& g, std::optional<VertexId> x, const OracleOptions& opts, Visit visit) {
  const std::size_t n = g.num_vertices();
  if (n > opts.max_vertices || n > 63) {
    throw DomainError("oracle: graph has " + std::to_string(n) + " vertices, above the size guard");
  }
  const std::vector<VertexId> vs = g.vertices();
  std::vector<Mask> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.has_edge(vs[i], vs[j])) adj[i] |= Mask{1} << j;
    }
  }
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask forbidden = 0;
  if (x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (vs[i] == *x) forbidden = Mask{1} << i;
    }
  }
  for (std::size_t size = 4; size < n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Mask s = 0;
      for (std::size_t i : idx) s |= Mask{1} << i;
      bool ok = !(s & forbidden);
      bool branching = false;
      for (Mask f = s; ok && f; f &= f - 1) {
        int d = std::popcount(adj[std::countr_zero(f)] & s);
        if (d < 2) ok = false;
        if (d >= 3) branching = true;
      }
      if (ok && branching && connected_mask(adj, s) && connected_mask(adj, all & ~s)) {
        VertexSet subset;
        for (std::size_t i : idx) subset.insert(vs[i]);
        if (auto c = recognize_induced_subdivision(g, subset, opts.patterns)) {
          if (!visit(*c)) return;
        }
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

std::optional<SubdivisionCertificate> oracle_search(const Graph& g, VertexId x, const OracleOptions& opts) {
  if (!g.has_vertex(x)) throw DomainError("oracle_search: x is not a vertex of G");
  std::optional<SubdivisionCertificate> found;
  scan(g, x, opts, [&](const SubdivisionCertificate& c) {
    found = c;
    return false;
  });
  return found;
}

std::vector<SubdivisionCertificate> oracle_enumerate(const Graph& g, std::optional<VertexId> x,
                                                     const OracleOptions& opts, std::size_t limit) {
  std::vector<SubdivisionCertificate> out;
  if (limit == 0) return out;
  scan(g, x, opts, [&](const SubdivisionCertificate& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

}  // namespace nonsep
