#include "wellconn/mincut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>
#include <utility>

#include "wellconn/error.hpp"

namespace wellconn {

std::vector<NodeId> CutResult::side_a() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < side.size(); ++v)
    if (side[v]) out.push_back(v);
  return out;
}

std::vector<NodeId> CutResult::side_b() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < side.size(); ++v)
    if (!side[v]) out.push_back(v);
  return out;
}

std::uint64_t cut_value(const Graph& g, const std::vector<bool>& side) {
  std::uint64_t value = 0;
  g.for_each_edge([&](NodeId u, NodeId v) { value += side[u] != side[v]; });
  return value;
}

namespace {

void require_cuttable(const Graph& g, const char* who) {
  if (g.n() < 2) throw ContractViolation(std::string(who) + ": graph needs at least two nodes");
  if (!is_connected(g)) throw ContractViolation(std::string(who) + ": graph is disconnected");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Weighted multigraph over super-nodes, CSR layout.
struct Contracted {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint64_t> weights;

  std::uint32_t size() const { return static_cast<std::uint32_t>(offsets.size() - 1); }
  std::uint64_t weighted_degree(std::uint32_t v) const {
    std::uint64_t d = 0;
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) d += weights[i];
    return d;
  }
};

struct WeightedEdge {
  std::uint32_t u, v;
  std::uint64_t w;
};

Contracted build(std::uint32_t n, std::vector<WeightedEdge>& edges) {
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  // Merge parallel edges.
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (out > 0 && edges[out - 1].u == edges[i].u && edges[out - 1].v == edges[i].v)
      edges[out - 1].w += edges[i].w;
    else
      edges[out++] = edges[i];
  }
  edges.resize(out);

  Contracted c;
  c.offsets.assign(std::size_t{n} + 1, 0);
  for (const auto& e : edges) {
    ++c.offsets[e.u + 1];
    ++c.offsets[e.v + 1];
  }
  std::partial_sum(c.offsets.begin(), c.offsets.end(), c.offsets.begin());
  c.targets.resize(edges.size() * 2);
  c.weights.resize(edges.size() * 2);
  std::vector<std::size_t> cursor(c.offsets.begin(), c.offsets.end() - 1);
  for (const auto& e : edges) {
    c.targets[cursor[e.u]] = e.v;
    c.weights[cursor[e.u]++] = e.w;
    c.targets[cursor[e.v]] = e.u;
    c.weights[cursor[e.v]++] = e.w;
  }
  return c;
}

// One maximum-adjacency pass from super-node 0. Any edge (x, y) scanned while
// y's attachment to the visited prefix reaches `bound` joins x and y: the
// ordering certifies their local connectivity is at least that attachment,
// so no cut cheaper than `bound` separates them.
void mark_contractible(const Contracted& c, std::uint64_t bound, DisjointSets& sets) {
  const std::uint32_t k = c.size();
  std::vector<std::uint64_t> attach(k, 0);
  std::vector<char> visited(k, 0);
  // Max-heap on attachment; equal attachments pop the lower index first.
  using Entry = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Entry> heap;
  auto key = [](std::uint32_t v) { return std::numeric_limits<std::uint32_t>::max() - v; };
  heap.emplace(0, key(0));
  while (!heap.empty()) {
    const auto [a, kx] = heap.top();
    heap.pop();
    const std::uint32_t x = std::numeric_limits<std::uint32_t>::max() - kx;
    if (visited[x] || a != attach[x]) continue;
    visited[x] = 1;
    for (std::size_t i = c.offsets[x]; i < c.offsets[x + 1]; ++i) {
      const std::uint32_t y = c.targets[i];
      if (visited[y]) continue;
      attach[y] += c.weights[i];
      if (attach[y] >= bound) sets.unite(x, y);
      heap.emplace(attach[y], key(y));
    }
  }
}

}  // namespace

CutResult global_min_cut(const Graph& g) {
  require_cuttable(g, "global_min_cut");
  const NodeId n = g.n();

  NodeId seed = 0;
  for (NodeId v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(seed)) seed = v;

  CutResult best;
  best.value = g.degree(seed);
  best.side.assign(n, false);
  best.side[seed] = true;
  if (best.value <= 1) return best;

  std::vector<WeightedEdge> edges;
  edges.reserve(g.m());
  g.for_each_edge([&](NodeId u, NodeId v) { edges.push_back({u, v, 1}); });
  Contracted current = build(n, edges);
  std::vector<std::uint32_t> owner(n);  // original node -> current super-node
  std::iota(owner.begin(), owner.end(), 0u);

  while (current.size() > 1) {
    const std::uint32_t k = current.size();
    DisjointSets sets(k);
    mark_contractible(current, best.value, sets);

    // Renumber roots by smallest member so super-node order stays stable.
    std::vector<std::uint32_t> renum(k, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < k; ++v) {
      const std::uint32_t r = sets.find(v);
      if (renum[r] == std::numeric_limits<std::uint32_t>::max()) renum[r] = next++;
      renum[v] = renum[r];
    }
    edges.clear();
    for (std::uint32_t v = 0; v < k; ++v)
      for (std::size_t i = current.offsets[v]; i < current.offsets[v + 1]; ++i) {
        const std::uint32_t y = current.targets[i];
        if (v >= y) continue;
        const std::uint32_t a = renum[v], b = renum[y];
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b), current.weights[i]});
      }
    current = build(next, edges);
    for (auto& o : owner) o = renum[o];
    if (current.size() <= 1) break;

    std::uint32_t arg = 0;
    std::uint64_t low = current.weighted_degree(0);
    for (std::uint32_t v = 1; v < current.size(); ++v)
      if (const auto d = current.weighted_degree(v); d < low) {
        low = d;
        arg = v;
      }
    if (low < best.value) {
      best.value = low;
      for (NodeId v = 0; v < n; ++v) best.side[v] = owner[v] == arg;
    }
  }
  return best;
}

CutResult brute_force_min_cut(const Graph& g) {
  if (g.n() > 16) throw ContractViolation("brute_force_min_cut: refusing n > 16");
  require_cuttable(g, "brute_force_min_cut");
  const NodeId n = g.n();

  std::vector<std::pair<NodeId, NodeId>> edges;
  g.for_each_edge([&](NodeId u, NodeId v) { edges.emplace_back(u, v); });

  auto members = [n](std::uint32_t mask) {
    std::vector<NodeId> s;
    for (NodeId v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    return s;
  };

  const std::uint32_t full = (1u << n) - 1;
  std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
  std::vector<NodeId> best_set;
  // Node 0 is pinned to side A: of the two orientations of a bipartition the
  // one holding 0 is always the lexicographically smaller set.
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    std::uint64_t value = 0;
    for (auto [u, v] : edges) value += ((mask >> u) ^ (mask >> v)) & 1u;
    if (value > best_value) continue;
    auto set = members(mask);
    if (value < best_value || set < best_set) {
      best_value = value;
      best_set = std::move(set);
    }
  }

  CutResult out;
  out.value = best_value;
  out.side.assign(n, false);
  for (NodeId v : best_set) out.side[v] = true;
  return out;
}

}  // namespace wellconn
