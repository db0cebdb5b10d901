#include "wellconn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wellconn/digest.hpp"
#include "wellconn/error.hpp"

namespace wellconn {

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges, std::vector<std::string> labels,
                        EdgeCount* self_loops, EdgeCount* duplicates) {
  if (!labels.empty() && labels.size() != n)
    throw ContractViolation("Graph::from_edges: label count does not match node count");

  // Normalise to u < v packed into one word so a single sort removes repeats.
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  EdgeCount loops = 0;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw ContractViolation("Graph::from_edges: endpoint out of range");
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    auto [a, b] = std::minmax(e.u, e.v);
    keys.push_back((std::uint64_t{a} << 32) | b);
  }
  std::sort(keys.begin(), keys.end());
  const auto unique_end = std::unique(keys.begin(), keys.end());
  const EdgeCount dups = static_cast<EdgeCount>(keys.end() - unique_end);
  keys.erase(unique_end, keys.end());
  if (self_loops) *self_loops = loops;
  if (duplicates) *duplicates = dups;

  Graph g;
  g.offsets_.assign(std::size_t{n} + 1, 0);
  for (std::uint64_t k : keys) {
    ++g.offsets_[(k >> 32) + 1];
    ++g.offsets_[(k & 0xffffffffu) + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(keys.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Keys are sorted by (a, b): every key whose second component is x precedes
  // every key whose first component is x, so each row fills in ascending order.
  for (std::uint64_t k : keys) {
    const auto a = static_cast<NodeId>(k >> 32);
    const auto b = static_cast<NodeId>(k & 0xffffffffu);
    g.neighbors_[cursor[a]++] = b;
    g.neighbors_[cursor[b]++] = a;
  }

  g.labels_ = std::move(labels);
  g.index_labels();
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(NodeId v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

std::optional<NodeId> Graph::find(std::string_view label) const {
  if (labels_.empty()) {
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
    if (ec != std::errc{} || ptr != label.data() + label.size() || v >= n()) return std::nullopt;
    return v;
  }
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (NodeId v = 0; v < labels_.size(); ++v)
    if (!index_.emplace(labels_[v], v).second) throw ContractViolation("Graph: duplicate node label '" + labels_[v] + "'");
}

void Graph::append_isolated(std::span<const std::string> new_labels) {
  if (labels_.empty() && n() > 0) {
    labels_.reserve(n());
    for (NodeId v = 0; v < n(); ++v) labels_.push_back(std::to_string(v));
    index_labels();
  }
  if (offsets_.empty()) offsets_.push_back(0);
  for (const auto& l : new_labels) {
    if (!index_.emplace(l, static_cast<NodeId>(labels_.size())).second)
      throw ContractViolation("Graph: label '" + l + "' already present");
    labels_.push_back(l);
    offsets_.push_back(offsets_.back());
  }
}

Graph Graph::with_isolated_nodes(std::span<const std::string> new_labels) const& {
  Graph copy = *this;
  copy.append_isolated(new_labels);
  return copy;
}

Graph Graph::with_isolated_nodes(std::span<const std::string> new_labels) && {
  append_isolated(new_labels);
  return std::move(*this);
}

std::string Graph::fingerprint() const {
  Sha256 h;
  const std::uint64_t header[2] = {n(), m()};
  h.update_pod(std::span<const std::uint64_t>(header));
  for (NodeId v = 0; v < n(); ++v) {
    const std::uint64_t deg = degree(v);
    h.update_pod(std::span<const std::uint64_t>(&deg, 1));
    h.update_pod(neighbors(v));
  }
  return h.finish();
}

namespace {

struct LabelInterner {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> index;

  NodeId intern(std::string_view token) {
    if (auto it = index.find(token); it != index.end()) return it->second;
    const auto id = static_cast<NodeId>(labels.size());
    labels.emplace_back(token);
    index.emplace(labels.back(), id);
    return id;
  }
};

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

LoadedGraph load_edgelist(std::istream& in, char delimiter) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  LabelInterner interner;
  std::vector<Edge> edges;
  IngestReport report;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line = strip_cr(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto sep = line.find(delimiter);
    if (sep == std::string_view::npos || sep == 0 || sep + 1 == line.size() ||
        line.find(delimiter, sep + 1) != std::string_view::npos)
      throw ParseError("expected two delimiter-separated node tokens", line_no);
    ++report.lines_read;
    const NodeId u = interner.intern(line.substr(0, sep));
    const NodeId v = interner.intern(line.substr(sep + 1));
    edges.push_back({u, v});
  }

  LoadedGraph out;
  const auto n = static_cast<NodeId>(interner.labels.size());
  out.graph = Graph::from_edges(n, edges, std::move(interner.labels), &report.self_loops_dropped,
                                &report.duplicate_edges_dropped);
  report.nodes = out.graph.n();
  report.edges = out.graph.m();
  out.report = report;
  return out;
}

LoadedGraph load_edgelist_file(const std::string& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open edgelist '" + path + "'");
  return load_edgelist(in, delimiter);
}

void write_edgelist(const Graph& g, std::ostream& out, char delimiter) {
  std::string buf;
  g.for_each_edge([&](NodeId u, NodeId v) {
    buf.append(g.label(u)).push_back(delimiter);
    buf.append(g.label(v)).push_back('\n');
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  });
  out << buf;
}

std::optional<NodeId> Subgraph::local(NodeId parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<NodeId>(it - to_parent.begin());
}

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes, Labels labels) {
  Subgraph sub;
  sub.to_parent.assign(nodes.begin(), nodes.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  if (std::adjacent_find(sub.to_parent.begin(), sub.to_parent.end()) != sub.to_parent.end())
    throw ContractViolation("induced_subgraph: repeated node index");
  if (!sub.to_parent.empty() && sub.to_parent.back() >= g.n())
    throw ContractViolation("induced_subgraph: node index out of range");

  const auto& members = sub.to_parent;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < members.size(); ++i) {
    for (NodeId w : g.neighbors(members[i])) {
      if (w <= members[i]) continue;
      auto it = std::lower_bound(members.begin() + i + 1, members.end(), w);
      if (it != members.end() && *it == w) edges.push_back({i, static_cast<NodeId>(it - members.begin())});
    }
  }
  std::vector<std::string> local_labels;
  if (labels == Labels::Keep && g.labeled()) {
    local_labels.reserve(members.size());
    for (NodeId p : members) local_labels.push_back(g.label(p));
  }
  sub.graph = Graph::from_edges(static_cast<NodeId>(members.size()), edges, std::move(local_labels));
  return sub;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    auto& comp = comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

}  // namespace wellconn
