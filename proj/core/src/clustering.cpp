#include "wellconn/clustering.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "wellconn/error.hpp"

namespace wellconn {

Clustering Clustering::from_labels(std::span<const std::uint64_t> labels) {
  Clustering c;
  c.assignment_.resize(labels.size());
  std::unordered_map<std::uint64_t, ClusterId> renum;
  renum.reserve(labels.size());
  for (NodeId v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = renum.try_emplace(labels[v], static_cast<ClusterId>(c.clusters_.size()));
    if (fresh) c.clusters_.emplace_back();
    c.assignment_[v] = it->second;
    c.clusters_[it->second].push_back(v);
  }
  return c;
}

Clustering Clustering::from_clusters(NodeId n, std::span<const std::vector<NodeId>> clusters) {
  constexpr std::uint64_t unset = ~std::uint64_t{0};
  std::vector<std::uint64_t> labels(n, unset);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (NodeId v : clusters[c]) {
      if (v >= n) throw ContractViolation("Clustering::from_clusters: node index out of range");
      if (labels[v] != unset) throw ContractViolation("Clustering::from_clusters: node in two clusters");
      labels[v] = c;
    }
  // Unlisted nodes get private labels past the listed ones.
  std::uint64_t fresh = clusters.size();
  for (auto& l : labels)
    if (l == unset) l = fresh++;
  return from_labels(labels);
}

Clustering Clustering::singletons(NodeId n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  return from_labels(labels);
}

Clustering Clustering::single(NodeId n) {
  std::vector<std::uint64_t> labels(n, 0);
  return from_labels(labels);
}

ThresholdSpec ThresholdSpec::log10_multiple(double coefficient) {
  if (!(coefficient >= 0.0) || !std::isfinite(coefficient))
    throw ContractViolation("threshold coefficient must be a finite non-negative number");
  return {Kind::Log10Multiple, coefficient};
}

ThresholdSpec ThresholdSpec::constant(std::uint64_t bound) { return {Kind::Constant, static_cast<double>(bound)}; }

ThresholdSpec ThresholdSpec::connectivity_only() { return {Kind::ConnectivityOnly, 0.0}; }

ThresholdSpec ThresholdSpec::parse(std::string_view text) {
  if (text == "connected") return connectivity_only();
  constexpr std::string_view suffix = "log10";
  if (text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
    const auto head = text.substr(0, text.size() - suffix.size());
    if (head.empty()) return log10_multiple(1.0);
    double c = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), c);
    if (ec != std::errc{} || ptr != head.data() + head.size() || !(c >= 0.0) || !std::isfinite(c))
      throw ParseError("bad threshold '" + std::string(text) + "'");
    return log10_multiple(c);
  }
  std::uint64_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad threshold '" + std::string(text) + "' (want e.g. 1log10, 2, connected)");
  return constant(k);
}

double ThresholdSpec::bound(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Log10Multiple:
      return n <= 1 ? 0.0 : coefficient_ * std::log10(static_cast<double>(n));
    case Kind::Constant:
      return coefficient_;
    case Kind::ConnectivityOnly:
      return 0.0;
  }
  return 0.0;
}

std::string ThresholdSpec::to_string() const {
  switch (kind_) {
    case Kind::Log10Multiple: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, coefficient_);
      return std::string(buf, ptr) + "log10";
    }
    case Kind::Constant:
      return std::to_string(static_cast<std::uint64_t>(coefficient_));
    case Kind::ConnectivityOnly:
      return "connected";
  }
  return {};
}

bool well_connected(std::uint64_t cut_value, std::uint64_t cluster_size, const ThresholdSpec& t) {
  if (cluster_size == 0) throw ContractViolation("well_connected: empty cluster");
  if (cluster_size == 1) return true;
  return static_cast<double>(cut_value) > t.bound(cluster_size);
}

bool at_threshold(std::uint64_t cut_value, std::uint64_t cluster_size, const ThresholdSpec& t) {
  return cluster_size >= 2 && static_cast<double>(cut_value) == t.bound(cluster_size);
}

double node_coverage(const Clustering& c) {
  if (c.n() == 0) return 0.0;
  std::size_t covered = 0;
  for (const auto& members : c.clusters())
    if (members.size() >= 2) covered += members.size();
  return 100.0 * static_cast<double>(covered) / static_cast<double>(c.n());
}

ClusterStats cluster_stats(const Clustering& c) {
  std::vector<std::size_t> sizes;
  for (const auto& members : c.clusters())
    if (members.size() >= 2) sizes.push_back(members.size());
  std::sort(sizes.begin(), sizes.end());

  ClusterStats s;
  s.non_singleton_count = sizes.size();
  s.node_coverage = node_coverage(c);
  if (!sizes.empty()) {
    const std::size_t mid = sizes.size() / 2;
    s.median_nonsingleton_size = sizes.size() % 2 ? static_cast<double>(sizes[mid])
                                                  : (static_cast<double>(sizes[mid - 1]) + sizes[mid]) / 2.0;
    s.max_nonsingleton_size = sizes.back();
  }
  return s;
}

bool is_refinement(const Clustering& fine, const Clustering& coarse) {
  if (fine.n() != coarse.n()) throw MismatchError("is_refinement: clusterings cover different node sets");
  for (const auto& members : fine.clusters()) {
    const ClusterId target = coarse.cluster_of(members.front());
    for (NodeId v : members)
      if (coarse.cluster_of(v) != target) return false;
  }
  return true;
}

std::vector<AssignmentRow> read_assignment(std::istream& in, char delimiter) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<AssignmentRow> rows;
  std::unordered_map<std::string_view, std::size_t> seen;  // label -> row index (views into `text`)

  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line = std::string_view(text).substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto sep = line.find(delimiter);
    if (sep == std::string_view::npos || sep == 0 || sep + 1 == line.size() ||
        line.find(delimiter, sep + 1) != std::string_view::npos)
      throw ParseError("expected node label and cluster token", line_no);
    const auto label = line.substr(0, sep);
    const auto token = line.substr(sep + 1);
    if (auto it = seen.find(label); it != seen.end()) {
      if (rows[it->second].token != token)
        throw ParseError("node '" + std::string(label) + "' assigned to clusters '" + rows[it->second].token +
                             "' and '" + std::string(token) + "'",
                         line_no);
      continue;
    }
    seen.emplace(label, rows.size());
    rows.push_back({std::string(label), std::string(token)});
  }
  return rows;
}

std::vector<AssignmentRow> read_assignment_file(const std::string& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open clustering '" + path + "'");
  return read_assignment(in, delimiter);
}

LoadedClustering attach_clustering(std::span<const AssignmentRow> rows, Graph graph) {
  LoadedClustering out;
  std::vector<std::string> unknown;
  for (const auto& row : rows)
    if (!graph.find(row.label)) unknown.push_back(row.label);
  out.unknown_nodes = unknown.size();
  out.graph = unknown.empty() ? std::move(graph) : std::move(graph).with_isolated_nodes(unknown);

  constexpr std::uint64_t unset = ~std::uint64_t{0};
  std::vector<std::uint64_t> labels(out.graph.n(), unset);
  std::unordered_map<std::string_view, std::uint64_t> tokens;
  for (const auto& row : rows) {
    auto [it, fresh] = tokens.try_emplace(row.token, tokens.size());
    labels[*out.graph.find(row.label)] = it->second;
  }
  std::uint64_t next = tokens.size();
  for (auto& l : labels)
    if (l == unset) l = next++;
  out.clustering = Clustering::from_labels(labels);
  return out;
}

LoadedClustering load_clustering(std::istream& in, Graph graph, char delimiter) {
  const auto rows = read_assignment(in, delimiter);
  return attach_clustering(rows, std::move(graph));
}

void write_clustering(const Graph& g, const Clustering& c, std::ostream& out) {
  if (g.n() != c.n()) throw MismatchError("write_clustering: clustering does not match graph");
  std::vector<std::string> labels(g.n());
  for (NodeId v = 0; v < g.n(); ++v) labels[v] = g.label(v);
  std::vector<NodeId> order(g.n());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return labels[a] < labels[b]; });
  std::string buf;
  for (NodeId v : order) {
    buf.append(labels[v]).push_back('\t');
    buf.append(std::to_string(c.cluster_of(v))).push_back('\n');
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

}  // namespace wellconn
