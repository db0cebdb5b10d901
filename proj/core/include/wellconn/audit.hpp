#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wellconn/clustering.hpp"
#include "wellconn/graph.hpp"

namespace wellconn {

enum class Category { Well, Poor, Disconnected, Singleton, Skipped };

std::string to_string(Category c);
Category category_from_string(const std::string& s);

struct ClusterRecord {
  ClusterId id = 0;
  std::size_t size = 0;
  bool connected = true;
  std::optional<std::uint64_t> min_cut;  // empty for singletons, disconnected and skipped clusters
  Category category = Category::Singleton;
  bool at_threshold = false;  // cut == f(size) exactly; strictness decided "poor"

  friend bool operator==(const ClusterRecord&, const ClusterRecord&) = default;
};

struct CategoryCounts {
  std::size_t well = 0;
  std::size_t poor = 0;
  std::size_t disconnected = 0;
  std::size_t skipped = 0;
  std::size_t singleton = 0;

  std::size_t non_singleton() const { return well + poor + disconnected + skipped; }
  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

/// Shares of non-singleton clusters; all zero when there are none.
struct CategoryProportions {
  double well = 0, poor = 0, disconnected = 0, skipped = 0;
  friend bool operator==(const CategoryProportions&, const CategoryProportions&) = default;
};

struct ConnectivityReport {
  std::string graph_fingerprint;
  std::string threshold;
  std::size_t nodes = 0;
  std::vector<ClusterRecord> clusters;
  CategoryCounts counts;
  CategoryProportions proportions;
  ClusterStats stats;

  friend bool operator==(const ConnectivityReport& a, const ConnectivityReport& b);
};

struct AuditOptions {
  unsigned workers = 1;
  /// Connected clusters larger than this are reported as skipped instead of
  /// having their minimum cut computed. Zero disables the cap.
  std::size_t max_cut_size = 0;
};

ConnectivityReport connectivity_audit(const Graph& g, const Clustering& c, const ThresholdSpec& t,
                                      const AuditOptions& opt = {});

struct AuditDelta {
  double node_coverage = 0;
  CategoryProportions proportions;
  std::int64_t non_singleton_count = 0;
  std::int64_t well = 0, poor = 0, disconnected = 0, singleton = 0;
  std::optional<double> median_nonsingleton_size;  // empty unless both sides have one
  std::int64_t max_nonsingleton_size = 0;
};

/// after - before. Throws MismatchError when the reports describe different graphs.
AuditDelta audit_delta(const ConnectivityReport& before, const ConnectivityReport& after);

nlohmann::json to_json(const ClusterStats& s);
ClusterStats cluster_stats_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConnectivityReport& r);
ConnectivityReport connectivity_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AuditDelta& d);

/// Per-cluster table: id, size, connected, min_cut, category, at_threshold.
void write_cluster_table(const ConnectivityReport& r, std::ostream& out);

}  // namespace wellconn
