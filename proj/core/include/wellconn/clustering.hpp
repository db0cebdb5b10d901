#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wellconn/graph.hpp"

namespace wellconn {

using ClusterId = std::uint32_t;

/// A partition of the nodes [0, n) into disjoint clusters.
///
/// Always held in canonical form: cluster ids are 0..k-1 ordered by the
/// smallest node each cluster contains, and member lists are ascending.
/// Two Clusterings compare equal exactly when they are the same partition.
class Clustering {
 public:
  Clustering() = default;

  /// Canonicalises an arbitrary per-node labelling (any integer tokens).
  static Clustering from_labels(std::span<const std::uint64_t> labels);
  /// Builds from explicit member lists over [0, n); nodes that appear in no
  /// list become singletons. Throws ContractViolation on overlap or range.
  static Clustering from_clusters(NodeId n, std::span<const std::vector<NodeId>> clusters);
  static Clustering singletons(NodeId n);
  static Clustering single(NodeId n);

  NodeId n() const noexcept { return static_cast<NodeId>(assignment_.size()); }
  std::size_t size() const noexcept { return clusters_.size(); }
  ClusterId cluster_of(NodeId v) const { return assignment_[v]; }
  const std::vector<NodeId>& members(ClusterId c) const { return clusters_[c]; }
  const std::vector<std::vector<NodeId>>& clusters() const noexcept { return clusters_; }
  const std::vector<ClusterId>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterId> assignment_;
  std::vector<std::vector<NodeId>> clusters_;
};

/// The bound f(n) a cluster's minimum cut must strictly exceed.
class ThresholdSpec {
 public:
  enum class Kind { Log10Multiple, Constant, ConnectivityOnly };

  static ThresholdSpec log10_multiple(double coefficient);
  static ThresholdSpec constant(std::uint64_t bound);
  static ThresholdSpec connectivity_only();
  /// Accepts "<c>log10" (e.g. "1log10", "0.5log10"), a non-negative integer
  /// constant, or "connected". Throws ParseError otherwise.
  static ThresholdSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return coefficient_; }
  double bound(std::uint64_t n) const;
  std::string to_string() const;

  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;

 private:
  ThresholdSpec(Kind kind, double coefficient) : kind_(kind), coefficient_(coefficient) {}
  Kind kind_ = Kind::Log10Multiple;
  double coefficient_ = 1.0;
};

/// True iff a cluster of `cluster_size` nodes with minimum cut `cut_value`
/// passes the threshold. Singletons pass by convention; otherwise the cut
/// must strictly exceed f(cluster_size).
bool well_connected(std::uint64_t cut_value, std::uint64_t cluster_size, const ThresholdSpec& t);

/// True when the cut equals f(n) exactly, so strictness decided the outcome.
bool at_threshold(std::uint64_t cut_value, std::uint64_t cluster_size, const ThresholdSpec& t);

struct ClusterStats {
  std::size_t non_singleton_count = 0;
  std::optional<double> median_nonsingleton_size;  // empty when there are no non-singletons
  std::size_t max_nonsingleton_size = 0;
  double node_coverage = 0.0;  // percent
};

/// Percentage of nodes in clusters of size >= 2; 0 for an empty universe.
double node_coverage(const Clustering& c);
ClusterStats cluster_stats(const Clustering& c);

/// True iff every cluster of `fine` lies inside one cluster of `coarse`.
/// Throws MismatchError if the node universes differ.
bool is_refinement(const Clustering& fine, const Clustering& coarse);

/// One "label<TAB>token" row as read from a clustering file.
struct AssignmentRow {
  std::string label;
  std::string token;
};

/// Reads node/cluster rows. Repeated identical rows are tolerated; the same
/// node under two different tokens is a ParseError.
std::vector<AssignmentRow> read_assignment(std::istream& in, char delimiter = '\t');
std::vector<AssignmentRow> read_assignment_file(const std::string& path, char delimiter = '\t');

struct LoadedClustering {
  Graph graph;  // input graph, extended by any labels only the file mentions
  Clustering clustering;
  std::size_t unknown_nodes = 0;  // labels admitted as degree-0 nodes
};

/// Maps rows onto `graph`. Graph nodes absent from the rows become
/// singletons; labels absent from the graph are appended as isolated nodes.
LoadedClustering attach_clustering(std::span<const AssignmentRow> rows, Graph graph);
LoadedClustering load_clustering(std::istream& in, Graph graph, char delimiter = '\t');

/// Writes every node as "label<TAB>cluster-id", sorted by label bytes.
void write_clustering(const Graph& g, const Clustering& c, std::ostream& out);

}  // namespace wellconn
