#include "wellconn/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "wellconn/error.hpp"

namespace wellconn {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("Rng::below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

GadgetSpec GadgetSpec::clique_ring(std::uint32_t k, std::uint32_t s, std::uint32_t b) {
  GadgetSpec g;
  g.kind = Kind::CliqueRing;
  g.cliques = k;
  g.clique_size = s;
  g.bridges = b;
  return g;
}

GadgetSpec GadgetSpec::bridged_cliques(std::uint32_t k, std::uint32_t s, std::uint32_t b, std::uint64_t seed) {
  GadgetSpec g = clique_ring(k, s, b);
  g.kind = Kind::BridgedCliques;
  g.seed = seed;
  return g;
}

GadgetSpec GadgetSpec::planted_partition_lite(NodeId n, std::uint32_t min_cluster, std::uint32_t max_cluster,
                                              double internal_degree, double external_degree, std::uint64_t seed) {
  GadgetSpec g;
  g.kind = Kind::PlantedPartitionLite;
  g.nodes = n;
  g.min_cluster = min_cluster;
  g.max_cluster = max_cluster;
  g.internal_degree = internal_degree;
  g.external_degree = external_degree;
  g.seed = seed;
  return g;
}

GadgetSpec GadgetSpec::random_gnp(NodeId n, double p, std::uint64_t seed) {
  GadgetSpec g;
  g.kind = Kind::RandomGnp;
  g.nodes = n;
  g.p = p;
  g.seed = seed;
  return g;
}

std::string GadgetSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::CliqueRing:
      os << "clique-ring(" << cliques << ", " << clique_size << ", " << bridges << ")";
      break;
    case Kind::BridgedCliques:
      os << "bridged-cliques(" << cliques << ", " << clique_size << ", " << bridges << ", seed " << seed << ")";
      break;
    case Kind::PlantedPartitionLite:
      os << "planted-partition-lite(n " << nodes << ", sizes " << min_cluster << ".." << max_cluster << ", d_in "
         << internal_degree << ", d_out " << external_degree << ", seed " << seed << ")";
      break;
    case Kind::RandomGnp:
      os << "random-gnp(n " << nodes << ", p " << p << ", seed " << seed << ")";
      break;
  }
  return os.str();
}

namespace {

std::vector<std::string> decimal_labels(NodeId n) {
  std::vector<std::string> labels(n);
  for (NodeId v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

Generated ring_of_cliques(const GadgetSpec& spec) {
  const std::uint32_t k = spec.cliques, s = spec.clique_size, b = spec.bridges;
  if (s < 1) throw ContractViolation("clique gadget: clique size must be at least 1");
  if (b > 0 && std::uint64_t{b} > std::uint64_t{s} * s)
    throw ContractViolation("clique gadget: more bridges than distinct endpoint pairs");
  const NodeId n = k * s;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> planted(n);
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint32_t i = 0; i < s; ++i) {
      planted[c * s + i] = c;
      for (std::uint32_t j = i + 1; j < s; ++j) edges.push_back({c * s + i, c * s + j});
    }

  Rng rng(spec.seed);
  const std::uint32_t ring_pairs = k < 2 ? 0 : (k == 2 ? 1 : k);
  for (std::uint32_t c = 0; c < ring_pairs; ++c) {
    const std::uint32_t d = (c + 1) % k;
    if (spec.kind == GadgetSpec::Kind::CliqueRing) {
      // j = q*s + r links local r to local (q + r) mod s: distinct for j < s*s.
      for (std::uint32_t j = 0; j < b; ++j)
        edges.push_back({c * s + j % s, d * s + (j / s + j % s) % s});
    } else {
      std::set<std::pair<std::uint32_t, std::uint32_t>> used;
      while (used.size() < b) {
        const auto u = static_cast<std::uint32_t>(rng.below(s));
        const auto v = static_cast<std::uint32_t>(rng.below(s));
        if (used.emplace(u, v).second) edges.push_back({c * s + u, d * s + v});
      }
    }
  }
  Generated out;
  out.graph = Graph::from_edges(n, edges, decimal_labels(n));
  out.truth = Clustering::from_labels(planted);
  return out;
}

Generated planted_partition(const GadgetSpec& spec) {
  if (spec.min_cluster < 1 || spec.max_cluster < spec.min_cluster)
    throw ContractViolation("planted-partition-lite: need 1 <= min_cluster <= max_cluster");
  if (!(spec.internal_degree >= 0) || !(spec.external_degree >= 0))
    throw ContractViolation("planted-partition-lite: degrees must be non-negative");
  const NodeId n = spec.nodes;
  Rng rng(spec.seed);

  std::vector<std::pair<NodeId, NodeId>> blocks;  // [begin, end)
  for (NodeId begin = 0; begin < n;) {
    const auto size = static_cast<NodeId>(spec.min_cluster + rng.below(spec.max_cluster - spec.min_cluster + 1));
    const NodeId end = n - begin < size ? n : begin + size;
    blocks.emplace_back(begin, end);
    begin = end;
  }

  std::vector<Edge> edges;
  std::vector<std::uint64_t> planted(n);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const auto [begin, end] = blocks[c];
    const NodeId size = end - begin;
    for (NodeId v = begin; v < end; ++v) planted[v] = c;
    if (size < 2) continue;
    const double max_pairs = 0.5 * size * (size - 1.0);
    const auto count = static_cast<std::uint64_t>(std::llround(std::min(max_pairs, 0.5 * size * spec.internal_degree)));
    for (std::uint64_t e = 0; e < count;) {
      const auto u = static_cast<NodeId>(begin + rng.below(size));
      const auto v = static_cast<NodeId>(begin + rng.below(size));
      if (u == v) continue;
      edges.push_back({u, v});
      ++e;
    }
  }
  if (blocks.size() > 1) {
    const auto count = static_cast<std::uint64_t>(std::llround(0.5 * n * spec.external_degree));
    for (std::uint64_t e = 0; e < count;) {
      const auto u = static_cast<NodeId>(rng.below(n));
      const auto v = static_cast<NodeId>(rng.below(n));
      if (planted[u] == planted[v]) continue;
      edges.push_back({u, v});
      ++e;
    }
  }
  Generated out;
  out.graph = Graph::from_edges(n, edges, decimal_labels(n));
  out.truth = Clustering::from_labels(planted);
  return out;
}

Generated gnp(const GadgetSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ContractViolation("random-gnp: p must lie in [0, 1]");
  const NodeId n = spec.nodes;
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  // Pairs (v, w) with w < v in row-major order; geometric skips between hits.
  if (spec.p > 0.0 && n > 1) {
    if (spec.p == 1.0) {
      for (NodeId v = 1; v < n; ++v)
        for (NodeId w = 0; w < v; ++w) edges.push_back({w, v});
    } else {
      const double log_q = std::log1p(-spec.p);
      std::int64_t v = 1, w = -1;
      while (v < n) {
        const double r = rng.uniform();
        const double skip = std::min(std::floor(std::log1p(-r) / log_q), 0x1p62);
        w += 1 + static_cast<std::int64_t>(skip);
        while (w >= v && v < n) {
          w -= v;
          ++v;
        }
        if (v < n) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
      }
    }
  }
  Generated out;
  out.graph = Graph::from_edges(n, edges, decimal_labels(n));
  out.truth = Clustering::from_clusters(n, connected_components(out.graph));
  return out;
}

}  // namespace

Generated generate(const GadgetSpec& spec) {
  switch (spec.kind) {
    case GadgetSpec::Kind::CliqueRing:
    case GadgetSpec::Kind::BridgedCliques:
      return ring_of_cliques(spec);
    case GadgetSpec::Kind::PlantedPartitionLite:
      return planted_partition(spec);
    case GadgetSpec::Kind::RandomGnp:
      return gnp(spec);
  }
  throw ContractViolation("generate: unknown gadget kind");
}

}  // namespace wellconn
