#pragma once

#include <cstdint>
#include <vector>

#include "wellconn/graph.hpp"

namespace wellconn {

/// A global minimum edge cut. side[v] is true for nodes on side A; both
/// sides are non-empty and `value` is the number of edges crossing them.
struct CutResult {
  std::uint64_t value = 0;
  std::vector<bool> side;

  std::vector<NodeId> side_a() const;
  std::vector<NodeId> side_b() const;
};

/// Exact global minimum cut of a connected graph with n >= 2.
///
/// Maximum-adjacency orderings seeded at the lowest index, contracting every
/// edge whose ordering bound already reaches the best cut found so far
/// (Nagamochi-Ono-Ibaraki). The incumbent starts as the trivial cut around
/// the lowest-index minimum-degree node and is only replaced by a strictly
/// smaller cut, so the result is a deterministic function of the graph.
/// When the minimum degree is 1 that leaf cut is returned immediately.
CutResult global_min_cut(const Graph& g);

/// Exhaustive reference solver for 2 <= n <= 16. Ties go to the
/// lexicographically smallest side-A index set, which always contains node 0.
CutResult brute_force_min_cut(const Graph& g);

/// Number of edges with endpoints on different sides.
std::uint64_t cut_value(const Graph& g, const std::vector<bool>& side);

}  // namespace wellconn
