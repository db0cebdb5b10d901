#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "wellconn/clustering.hpp"
#include "wellconn/graph.hpp"

namespace wellconn {

/// Portable pseudo-random source for generators: std::mt19937_64 (fully
/// specified by the standard) with bounded integers drawn by rejection and
/// reals as the top 53 bits scaled to [0, 1). The standard distribution
/// classes are avoided because their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct GadgetSpec {
  enum class Kind { CliqueRing, BridgedCliques, PlantedPartitionLite, RandomGnp };
  Kind kind = Kind::CliqueRing;
  std::uint64_t seed = 1;

  // clique-ring, bridged-cliques
  std::uint32_t cliques = 0;
  std::uint32_t clique_size = 0;
  std::uint32_t bridges = 0;  // edges between each ring-adjacent pair of cliques

  // planted-partition-lite, random-gnp
  NodeId nodes = 0;
  std::uint32_t min_cluster = 0;
  std::uint32_t max_cluster = 0;
  double internal_degree = 0;  // expected, before duplicate removal
  double external_degree = 0;
  double p = 0;  // random-gnp edge probability

  /// k cliques of size s; ring-adjacent cliques joined by b edges with fixed endpoints.
  static GadgetSpec clique_ring(std::uint32_t k, std::uint32_t s, std::uint32_t b);
  /// As clique_ring but bridge endpoints are drawn from `seed`.
  static GadgetSpec bridged_cliques(std::uint32_t k, std::uint32_t s, std::uint32_t b, std::uint64_t seed = 1);
  static GadgetSpec planted_partition_lite(NodeId n, std::uint32_t min_cluster, std::uint32_t max_cluster,
                                           double internal_degree, double external_degree, std::uint64_t seed);
  static GadgetSpec random_gnp(NodeId n, double p, std::uint64_t seed);

  std::string describe() const;
};

struct Generated {
  Graph graph;       // labels are decimal node indices
  Clustering truth;  // planted clusters; components for random-gnp
};

/// Deterministic in the spec. Throws ContractViolation on degenerate parameters.
Generated generate(const GadgetSpec& spec);

}  // namespace wellconn
