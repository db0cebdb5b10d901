#include "wellconn/audit.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "wellconn/error.hpp"
#include "wellconn/mincut.hpp"
#include "wellconn/parallel.hpp"

namespace wellconn {

std::string to_string(Category c) {
  switch (c) {
    case Category::Well: return "well";
    case Category::Poor: return "poor";
    case Category::Disconnected: return "disconnected";
    case Category::Singleton: return "singleton";
    case Category::Skipped: return "skipped";
  }
  return "?";
}

Category category_from_string(const std::string& s) {
  for (auto c : {Category::Well, Category::Poor, Category::Disconnected, Category::Singleton, Category::Skipped})
    if (to_string(c) == s) return c;
  throw ParseError("unknown cluster category '" + s + "'");
}

bool operator==(const ConnectivityReport& a, const ConnectivityReport& b) {
  const auto stats_eq = [](const ClusterStats& x, const ClusterStats& y) {
    return x.non_singleton_count == y.non_singleton_count && x.median_nonsingleton_size == y.median_nonsingleton_size &&
           x.max_nonsingleton_size == y.max_nonsingleton_size && x.node_coverage == y.node_coverage;
  };
  return a.graph_fingerprint == b.graph_fingerprint && a.threshold == b.threshold && a.nodes == b.nodes &&
         a.clusters == b.clusters && a.counts == b.counts && a.proportions == b.proportions &&
         stats_eq(a.stats, b.stats);
}

ConnectivityReport connectivity_audit(const Graph& g, const Clustering& c, const ThresholdSpec& t,
                                      const AuditOptions& opt) {
  if (g.n() != c.n()) throw MismatchError("connectivity_audit: clustering does not cover the graph");
  ConnectivityReport r;
  r.graph_fingerprint = g.fingerprint();
  r.threshold = t.to_string();
  r.nodes = g.n();
  r.clusters.resize(c.size());

  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.members(a).size() > c.members(b).size(); });
  parallel_for(order, opt.workers, [&](std::size_t id) {
    const auto& members = c.members(static_cast<ClusterId>(id));
    ClusterRecord& rec = r.clusters[id];
    rec.id = static_cast<ClusterId>(id);
    rec.size = members.size();
    if (members.size() == 1) {
      rec.category = Category::Singleton;
      return;
    }
    const Subgraph sub = induced_subgraph(g, members, Labels::Drop);
    rec.connected = is_connected(sub.graph);
    if (!rec.connected) {
      rec.category = Category::Disconnected;
      return;
    }
    if (opt.max_cut_size && members.size() > opt.max_cut_size) {
      rec.category = Category::Skipped;
      return;
    }
    const auto cut = global_min_cut(sub.graph).value;
    rec.min_cut = cut;
    rec.category = well_connected(cut, members.size(), t) ? Category::Well : Category::Poor;
    rec.at_threshold = at_threshold(cut, members.size(), t);
  });

  for (const auto& rec : r.clusters) {
    switch (rec.category) {
      case Category::Well: ++r.counts.well; break;
      case Category::Poor: ++r.counts.poor; break;
      case Category::Disconnected: ++r.counts.disconnected; break;
      case Category::Singleton: ++r.counts.singleton; break;
      case Category::Skipped: ++r.counts.skipped; break;
    }
  }
  if (const auto total = static_cast<double>(r.counts.non_singleton()); total > 0) {
    r.proportions.well = static_cast<double>(r.counts.well) / total;
    r.proportions.poor = static_cast<double>(r.counts.poor) / total;
    r.proportions.disconnected = static_cast<double>(r.counts.disconnected) / total;
    r.proportions.skipped = static_cast<double>(r.counts.skipped) / total;
  }
  r.stats = cluster_stats(c);
  return r;
}

AuditDelta audit_delta(const ConnectivityReport& before, const ConnectivityReport& after) {
  if (before.graph_fingerprint != after.graph_fingerprint)
    throw MismatchError("audit_delta: reports were computed on different graphs");
  auto diff = [](std::size_t a, std::size_t b) { return static_cast<std::int64_t>(b) - static_cast<std::int64_t>(a); };
  AuditDelta d;
  d.node_coverage = after.stats.node_coverage - before.stats.node_coverage;
  d.proportions.well = after.proportions.well - before.proportions.well;
  d.proportions.poor = after.proportions.poor - before.proportions.poor;
  d.proportions.disconnected = after.proportions.disconnected - before.proportions.disconnected;
  d.proportions.skipped = after.proportions.skipped - before.proportions.skipped;
  d.non_singleton_count = diff(before.stats.non_singleton_count, after.stats.non_singleton_count);
  d.well = diff(before.counts.well, after.counts.well);
  d.poor = diff(before.counts.poor, after.counts.poor);
  d.disconnected = diff(before.counts.disconnected, after.counts.disconnected);
  d.singleton = diff(before.counts.singleton, after.counts.singleton);
  if (before.stats.median_nonsingleton_size && after.stats.median_nonsingleton_size)
    d.median_nonsingleton_size = *after.stats.median_nonsingleton_size - *before.stats.median_nonsingleton_size;
  d.max_nonsingleton_size = diff(before.stats.max_nonsingleton_size, after.stats.max_nonsingleton_size);
  return d;
}

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const CategoryProportions& p) {
  return {{"well", p.well}, {"poor", p.poor}, {"disconnected", p.disconnected}, {"skipped", p.skipped}};
}

CategoryProportions proportions_from_json(const json& j) {
  return {j.at("well").get<double>(), j.at("poor").get<double>(), j.at("disconnected").get<double>(),
          j.at("skipped").get<double>()};
}

}  // namespace

json to_json(const ClusterStats& s) {
  return {{"non_singleton_count", s.non_singleton_count},
          {"median_nonsingleton_size", optional_number(s.median_nonsingleton_size)},
          {"max_nonsingleton_size", s.max_nonsingleton_size},
          {"node_coverage", s.node_coverage}};
}

ClusterStats cluster_stats_from_json(const json& j) {
  ClusterStats s;
  s.non_singleton_count = j.at("non_singleton_count").get<std::size_t>();
  if (!j.at("median_nonsingleton_size").is_null())
    s.median_nonsingleton_size = j.at("median_nonsingleton_size").get<double>();
  s.max_nonsingleton_size = j.at("max_nonsingleton_size").get<std::size_t>();
  s.node_coverage = j.at("node_coverage").get<double>();
  return s;
}

json to_json(const ConnectivityReport& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters)
    clusters.push_back({{"id", c.id},
                        {"size", c.size},
                        {"connected", c.connected},
                        {"min_cut", c.min_cut ? json(*c.min_cut) : json(nullptr)},
                        {"category", to_string(c.category)},
                        {"at_threshold", c.at_threshold}});
  return {{"graph_fingerprint", r.graph_fingerprint},
          {"threshold", r.threshold},
          {"nodes", r.nodes},
          {"clusters", std::move(clusters)},
          {"counts",
           {{"well", r.counts.well},
            {"poor", r.counts.poor},
            {"disconnected", r.counts.disconnected},
            {"skipped", r.counts.skipped},
            {"singleton", r.counts.singleton}}},
          {"proportions", to_json(r.proportions)},
          {"stats", to_json(r.stats)}};
}

ConnectivityReport connectivity_report_from_json(const json& j) {
  ConnectivityReport r;
  r.graph_fingerprint = j.at("graph_fingerprint").get<std::string>();
  r.threshold = j.at("threshold").get<std::string>();
  r.nodes = j.at("nodes").get<std::size_t>();
  for (const auto& c : j.at("clusters")) {
    ClusterRecord rec;
    rec.id = c.at("id").get<ClusterId>();
    rec.size = c.at("size").get<std::size_t>();
    rec.connected = c.at("connected").get<bool>();
    if (!c.at("min_cut").is_null()) rec.min_cut = c.at("min_cut").get<std::uint64_t>();
    rec.category = category_from_string(c.at("category").get<std::string>());
    rec.at_threshold = c.at("at_threshold").get<bool>();
    r.clusters.push_back(rec);
  }
  const auto& counts = j.at("counts");
  r.counts.well = counts.at("well").get<std::size_t>();
  r.counts.poor = counts.at("poor").get<std::size_t>();
  r.counts.disconnected = counts.at("disconnected").get<std::size_t>();
  r.counts.skipped = counts.at("skipped").get<std::size_t>();
  r.counts.singleton = counts.at("singleton").get<std::size_t>();
  r.proportions = proportions_from_json(j.at("proportions"));
  r.stats = cluster_stats_from_json(j.at("stats"));
  return r;
}

json to_json(const AuditDelta& d) {
  return {{"node_coverage", d.node_coverage},
          {"proportions", to_json(d.proportions)},
          {"non_singleton_count", d.non_singleton_count},
          {"counts", {{"well", d.well}, {"poor", d.poor}, {"disconnected", d.disconnected}, {"singleton", d.singleton}}},
          {"median_nonsingleton_size", optional_number(d.median_nonsingleton_size)},
          {"max_nonsingleton_size", d.max_nonsingleton_size}};
}

void write_cluster_table(const ConnectivityReport& r, std::ostream& out) {
  out << "cluster_id\tsize\tconnected\tmin_cut\tcategory\tat_threshold\n";
  for (const auto& c : r.clusters) {
    out << c.id << '\t' << c.size << '\t' << (c.connected ? "true" : "false") << '\t';
    if (c.min_cut) out << *c.min_cut;
    else out << "NA";
    out << '\t' << to_string(c.category) << '\t' << (c.at_threshold ? "true" : "false") << '\n';
  }
}

}  // namespace wellconn
