#include "wellconn/treatments.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "wellconn/error.hpp"
#include "wellconn/mincut.hpp"
#include "wellconn/parallel.hpp"

namespace wellconn {

void TreatmentTrace::absorb(const TreatmentTrace& other) {
  cuts_performed += other.cuts_performed;
  component_splits += other.component_splits;
  reclusterings += other.reclusterings;
  max_recursion_depth = std::max(max_recursion_depth, other.max_recursion_depth);
}

Clustering IdentityClusterer::cluster(const Graph& part) const { return Clustering::single(part.n()); }

Clustering ComponentsClusterer::cluster(const Graph& part) const {
  const auto comps = connected_components(part);
  return Clustering::from_clusters(part.n(), comps);
}

namespace {

// A piece of an original cluster under treatment. `nodes` holds indices in
// the input graph (ascending) and `graph` is the piece's own induced
// subgraph with edges removed by earlier cuts already gone.
struct Piece {
  Graph graph;
  std::vector<NodeId> nodes;
  std::size_t depth = 0;
};

Piece child_piece(const Piece& parent, std::span<const NodeId> local_nodes) {
  Subgraph sub = induced_subgraph(parent.graph, local_nodes, Labels::Drop);
  Piece out;
  out.graph = std::move(sub.graph);
  out.nodes.reserve(sub.to_parent.size());
  for (NodeId local : sub.to_parent) out.nodes.push_back(parent.nodes[local]);
  out.depth = parent.depth + 1;
  return out;
}

std::uint64_t min_degree(const Graph& g) {
  std::uint64_t low = g.degree(0);
  for (NodeId v = 1; v < g.n(); ++v) low = std::min<std::uint64_t>(low, g.degree(v));
  return low;
}

Graph labeled_copy(const Graph& g, const Piece& piece) {
  std::vector<std::string> labels;
  labels.reserve(piece.nodes.size());
  for (NodeId v : piece.nodes) labels.push_back(g.label(v));
  std::vector<Edge> edges;
  piece.graph.for_each_edge([&](NodeId u, NodeId v) { edges.push_back({u, v}); });
  return Graph::from_edges(piece.graph.n(), edges, std::move(labels));
}

struct ClusterOutcome {
  std::vector<std::vector<NodeId>> clusters;
  TreatmentTrace trace;
};

// Counts edge-disjoint s-t paths through live nodes, stopping at `cap`.
class LocalFlow {
 public:
  explicit LocalFlow(const Graph& g) : g_(g), stamp_(g.n(), 0), parent_(g.n(), 0) {}

  std::uint64_t paths(NodeId s, NodeId t, std::uint64_t cap, const std::vector<char>& gone) {
    flow_.clear();
    std::uint64_t found = 0;
    while (found < cap && augment(s, t, gone)) ++found;
    return found;
  }

 private:
  static std::uint64_t key(NodeId a, NodeId b) {
    return a < b ? (std::uint64_t{a} << 32 | b) : (std::uint64_t{b} << 32 | a);
  }
  // Flow on {a, b} in the a -> b direction, in {-1, 0, 1}.
  int directed(NodeId a, NodeId b) const {
    const auto it = flow_.find(key(a, b));
    const int f = it == flow_.end() ? 0 : it->second;
    return a < b ? f : -f;
  }

  bool augment(NodeId s, NodeId t, const std::vector<char>& gone) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(s);
    stamp_[s] = epoch_;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId a = queue_[head];
      for (NodeId b : g_.neighbors(a)) {
        if (gone[b] || stamp_[b] == epoch_ || directed(a, b) == 1) continue;
        stamp_[b] = epoch_;
        parent_[b] = a;
        if (b == t) {
          for (NodeId y = t; y != s; y = parent_[y]) {
            const NodeId x = parent_[y];
            flow_[key(x, y)] += x < y ? 1 : -1;
          }
          return true;
        }
        queue_.push_back(b);
      }
    }
    return false;
  }

  const Graph& g_;
  std::unordered_map<std::uint64_t, int> flow_;
  std::vector<std::uint32_t> stamp_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> queue_;
  std::uint32_t epoch_ = 0;
};

// Continues from a piece whose minimum cut is the trivial cut around its
// lowest-index minimum-degree node and fails the threshold; that cut is
// already counted. Reproduces the from-scratch sequence of cuts:
// after removing v, a cut of the rest that is cheaper than the old minimum
// must separate two former neighbours of v, so bounded local flows between
// them show whether the new minimum degree is still the minimum cut. When
// they do not, the rest goes back on the stack for a full computation.
void peel_run(Piece piece, const ThresholdSpec& t, ClusterOutcome& out, std::vector<Piece>& stack) {
  const Graph& g = piece.graph;
  const NodeId n = g.n();
  std::vector<char> gone(n, 0);
  std::vector<std::uint64_t> deg(n);
  std::set<std::pair<std::uint64_t, NodeId>> by_degree;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    by_degree.emplace(deg[v], v);
  }
  LocalFlow flow(g);
  NodeId alive = n;
  std::size_t depth = piece.depth;
  std::vector<NodeId> nbrs;
  // Minimum cut of the current remainder; it starts as the trivial cut just found.
  std::uint64_t lambda = by_degree.begin()->first;

  auto live_nodes = [&] {
    std::vector<NodeId> local;
    local.reserve(alive);
    for (NodeId v = 0; v < n; ++v)
      if (!gone[v]) local.push_back(v);
    return local;
  };

  for (;;) {
    const NodeId v = by_degree.begin()->second;
    by_degree.erase(by_degree.begin());
    gone[v] = 1;
    --alive;
    ++depth;
    out.trace.max_recursion_depth = std::max(out.trace.max_recursion_depth, depth);
    out.clusters.push_back({piece.nodes[v]});

    nbrs.clear();
    for (NodeId u : g.neighbors(v)) {
      if (gone[u]) continue;
      by_degree.erase({deg[u], u});
      by_degree.emplace(--deg[u], u);
      nbrs.push_back(u);
    }
    if (alive == 1) {
      out.clusters.push_back({piece.nodes[by_degree.begin()->second]});
      return;
    }

    const std::uint64_t low = by_degree.begin()->first;
    // Cuts not separating the neighbours of v are cuts of the previous remainder, so
    // they are at least lambda; the flows bound the rest.
    bool certified = low > 0 && low <= lambda;
    for (std::size_t i = 1; certified && i < nbrs.size(); ++i)
      certified = flow.paths(nbrs[0], nbrs[i], low, gone) >= low;
    if (!certified) {
      const auto local = live_nodes();
      Piece rest = child_piece(piece, local);
      rest.depth = depth;
      stack.push_back(std::move(rest));
      return;
    }
    if (well_connected(low, alive, t)) {
      std::vector<NodeId> members;
      for (NodeId u : live_nodes()) members.push_back(piece.nodes[u]);
      out.clusters.push_back(std::move(members));
      return;
    }
    lambda = low;
    ++out.trace.cuts_performed;
  }
}

// Work-stack treatment of one input cluster; `reclusterer` null means WCC.
ClusterOutcome split_until_well_connected(const Graph& g, const std::vector<NodeId>& members, const ThresholdSpec& t,
                                          const Clusterer* reclusterer, bool incremental) {
  ClusterOutcome out;
  std::vector<Piece> stack;
  {
    Subgraph root = induced_subgraph(g, members, Labels::Drop);
    stack.push_back({std::move(root.graph), std::move(root.to_parent), 0});
  }

  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    out.trace.max_recursion_depth = std::max(out.trace.max_recursion_depth, piece.depth);
    const NodeId size = piece.graph.n();
    if (size == 1) {
      out.clusters.push_back(std::move(piece.nodes));
      continue;
    }

    std::vector<std::vector<NodeId>> parts = connected_components(piece.graph);
    if (parts.size() > 1) {
      ++out.trace.component_splits;
    } else {
      CutResult cut = global_min_cut(piece.graph);
      if (well_connected(cut.value, size, t)) {
        out.clusters.push_back(std::move(piece.nodes));
        continue;
      }
      ++out.trace.cuts_performed;
      if (!reclusterer && incremental && cut.value == min_degree(piece.graph)) {
        peel_run(std::move(piece), t, out, stack);
        continue;
      }
      parts = {cut.side_a(), cut.side_b()};
    }

    std::vector<Piece> next;
    for (const auto& part : parts) {
      Piece p = child_piece(piece, part);
      if (!reclusterer) {
        next.push_back(std::move(p));
        continue;
      }
      const Clustering rc = reclusterer->needs_labels() ? reclusterer->cluster(labeled_copy(g, p))
                                                        : reclusterer->cluster(p.graph);
      ++out.trace.reclusterings;
      if (rc.n() != p.graph.n())
        throw ClustererError(reclusterer->name() + " returned " + std::to_string(rc.n()) + " nodes for a part of " +
                             std::to_string(p.graph.n()));
      if (rc.size() == 1) {
        next.push_back(std::move(p));
        continue;
      }
      for (const auto& cl : rc.clusters()) {
        Piece q = child_piece(p, cl);
        q.depth = p.depth;
        next.push_back(std::move(q));
      }
    }
    // Reverse so the first part is processed first.
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
  }
  return out;
}

std::vector<std::size_t> largest_first(const Clustering& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.members(a).size() > c.members(b).size(); });
  return order;
}

void require_cover(const Graph& g, const Clustering& c) {
  if (g.n() != c.n()) throw MismatchError("clustering covers " + std::to_string(c.n()) + " nodes, graph has " +
                                          std::to_string(g.n()));
}

template <typename PerCluster>
TreatmentResult run_per_cluster(const Graph& g, const Clustering& c, const TreatmentOptions& opt, PerCluster&& work) {
  require_cover(g, c);
  std::vector<ClusterOutcome> outcomes(c.size());
  const auto order = largest_first(c);
  parallel_for(order, opt.workers, [&](std::size_t id) {
    outcomes[id] = work(c.members(static_cast<ClusterId>(id)));
    if (opt.on_cluster_done) opt.on_cluster_done(static_cast<ClusterId>(id), outcomes[id].trace);
  });

  TreatmentResult result;
  std::vector<std::vector<NodeId>> all;
  for (auto& o : outcomes) {
    result.trace.absorb(o.trace);
    for (auto& cl : o.clusters) all.push_back(std::move(cl));
  }
  result.clustering = Clustering::from_clusters(g.n(), all);
  result.trace.clusters_in = c.size();
  result.trace.clusters_out = result.clustering.size();
  return result;
}

}  // namespace

TreatmentResult cc_treatment(const Graph& g, const Clustering& c, const TreatmentOptions& opt) {
  return run_per_cluster(g, c, opt, [&](const std::vector<NodeId>& members) {
    ClusterOutcome out;
    if (members.size() == 1) {
      out.clusters.push_back(members);
      return out;
    }
    const Subgraph sub = induced_subgraph(g, members, Labels::Drop);
    auto comps = connected_components(sub.graph);
    if (comps.size() > 1) {
      ++out.trace.component_splits;
      out.trace.max_recursion_depth = 1;
    }
    for (auto& comp : comps) {
      for (auto& v : comp) v = sub.to_parent[v];
      out.clusters.push_back(std::move(comp));
    }
    return out;
  });
}

TreatmentResult wcc_treatment(const Graph& g, const Clustering& c, const ThresholdSpec& t,
                              const TreatmentOptions& opt) {
  return run_per_cluster(g, c, opt, [&](const std::vector<NodeId>& members) {
    return split_until_well_connected(g, members, t, nullptr, opt.incremental_peeling);
  });
}

TreatmentResult cm_treatment(const Graph& g, const Clustering& c, const ThresholdSpec& t, const Clusterer& reclusterer,
                             const TreatmentOptions& opt) {
  return run_per_cluster(g, c, opt, [&](const std::vector<NodeId>& members) {
    return split_until_well_connected(g, members, t, &reclusterer, false);
  });
}

}  // namespace wellconn
