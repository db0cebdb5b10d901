#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wellconn/clustering.hpp"
#include "wellconn/graph.hpp"

namespace wellconn {

/// Sparse contingency table between a reference clustering (rows) and an
/// estimate (columns). Only non-zero cells are stored, sorted by (row, col).
struct ContingencyTable {
  struct Cell {
    ClusterId row;
    ClusterId col;
    std::uint64_t count;
  };
  std::vector<Cell> cells;
  std::vector<std::uint64_t> row_sums;
  std::vector<std::uint64_t> col_sums;
  std::uint64_t total = 0;
};

/// Throws MismatchError when the two clusterings cover different node counts.
ContingencyTable contingency(const Clustering& truth, const Clustering& est);

/// Mutual information over the mean of the two entropies (base 2). When both
/// entropies vanish the score is 1 for identical partitions and 0 otherwise.
double nmi(const Clustering& truth, const Clustering& est);

/// Hubert-Arabie adjusted Rand index over unordered node pairs. A vanishing
/// denominator yields 1 for identical partitions and 0 otherwise.
double ari(const Clustering& truth, const Clustering& est);

/// Adjusted Rand construction restricted to the graph's edges: each edge is
/// "internal" or not under each clustering and agreement between the two
/// binary labellings is corrected for chance given their marginals. Equals
/// ari() on a complete graph.
double agri(const Graph& g, const Clustering& truth, const Clustering& est);

/// How log Omega(a, b), the log-count of contingency tables with the given
/// margins, was obtained.
enum class TableCountMethod { Exact, Approximate };

struct RmiResult {
  double value = 0;            // bits per node
  double mutual_information = 0;  // combinatorial form, bits per node
  double log2_table_count = 0;    // log2 Omega(a, b)
  TableCountMethod method = TableCountMethod::Exact;
};

/// Reduced mutual information: the combinatorial mutual information
/// (1/n) log2[n! prod n_rs! / (prod a_r! prod b_s!)] minus (1/n) log2 Omega(a, b).
/// With `normalized`, divides by the same quantity for truth against itself,
/// so rmi(c, c, true) = 1; a zero self-information yields 1 for identical
/// partitions and 0 otherwise.
RmiResult rmi(const Clustering& truth, const Clustering& est, bool normalized);

/// Natural log of the number of non-negative integer matrices with the given
/// row and column sums, counted exactly by dynamic programming over rows
/// with sorted remaining column capacities as state. Returns nullopt once the
/// memo would hold more than `max_states` capacity entries.
std::optional<double> log_table_count_exact(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols,
                                            std::size_t max_states = 4'000'000);

/// Analytic estimate of the same quantity (natural log), after Jerdee, Kirkley
/// and Newman's effective-columns approximation to the count of contingency
/// tables. Exact (zero) when either margin has a single entry.
double log_table_count_approx(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols);

/// Exact when feasible, otherwise the approximation.
double log_table_count(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols,
                       TableCountMethod* method = nullptr);

std::string to_string(TableCountMethod m);

}  // namespace wellconn
