#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wellconn {

using NodeId = std::uint32_t;
using EdgeCount = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;
};

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};
}  // namespace detail

/// Simple undirected graph in compressed sparse row form.
///
/// Nodes are dense indices in [0, n). Each node optionally carries an
/// external label; graphs produced by induced_subgraph() with labels dropped
/// report their index as the label. Neighbour lists are sorted ascending and
/// contain neither self-loops nor repeats. Instances are immutable once
/// built and may be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and repeated unordered
  /// pairs are discarded; the counts of each are written to the optional
  /// out-parameters.
  static Graph from_edges(NodeId n, std::span<const Edge> edges, std::vector<std::string> labels = {},
                          EdgeCount* self_loops = nullptr, EdgeCount* duplicates = nullptr);

  NodeId n() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  EdgeCount m() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  bool labeled() const noexcept { return !labels_.empty(); }
  std::string label(NodeId v) const;
  std::optional<NodeId> find(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Returns a copy extended by degree-0 nodes carrying the given labels.
  /// Labels already present are rejected.
  Graph with_isolated_nodes(std::span<const std::string> new_labels) const&;
  Graph with_isolated_nodes(std::span<const std::string> new_labels) &&;

  /// Calls fn(u, v) once per edge with u < v, ordered by (u, v).
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeId u = 0; u < n(); ++u)
      for (NodeId v : neighbors(u))
        if (u < v) fn(u, v);
  }

  /// Content hash over n, m and the adjacency structure (labels excluded).
  std::string fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_ && a.labels_ == b.labels_;
  }

 private:
  void index_labels();
  void append_isolated(std::span<const std::string> new_labels);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> index_;
};

struct IngestReport {
  std::size_t lines_read = 0;
  EdgeCount self_loops_dropped = 0;
  EdgeCount duplicate_edges_dropped = 0;
  NodeId nodes = 0;
  EdgeCount edges = 0;
};

struct LoadedGraph {
  Graph graph;
  IngestReport report;
};

/// Reads a two-column edgelist. Node indices follow first appearance in the
/// stream. Blank lines are skipped; any other line must hold exactly two
/// tokens separated by `delimiter`, otherwise ParseError.
LoadedGraph load_edgelist(std::istream& in, char delimiter = '\t');
LoadedGraph load_edgelist_file(const std::string& path, char delimiter = '\t');

/// Writes each edge once as "label<delim>label", ordered by (u, v).
void write_edgelist(const Graph& g, std::ostream& out, char delimiter = '\t');

struct Subgraph {
  Graph graph;
  /// to_parent[i] is the parent index of local node i; ascending.
  std::vector<NodeId> to_parent;

  /// Local index of a parent node, if it is part of the subgraph.
  std::optional<NodeId> local(NodeId parent) const;
};

enum class Labels { Keep, Drop };

/// Subgraph induced by `nodes` (any order, no repeats). Local indices follow
/// ascending parent index. Throws ContractViolation on out-of-range or
/// repeated indices.
Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes, Labels labels = Labels::Keep);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace wellconn
