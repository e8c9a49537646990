#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

struct OracleOptions {
  /// Refuse graphs with more vertices than this (DomainError).
  std::size_t max_vertices = 14;
  PatternSet patterns = PatternSet::theorem();
};

/// Brute-force search for an induced nonseparating subdivision avoiding x.
/// Vertex subsets are tried by increasing size, then lexicographically by
/// label, so the answer is deterministic.
std::optional<SubdivisionCertificate> oracle_search(const Graph& g, VertexId x,
                                                    const OracleOptions& opts = {});

/// Every induced nonseparating subdivision (avoiding x when given), in the
/// same order, stopping after `limit` results.
std::vector<SubdivisionCertificate> oracle_enumerate(
    const Graph& g, std::optional<VertexId> x, const OracleOptions& opts = {},
    std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace nonsep
