#include "wellconn_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wellconn/audit.hpp"
#include "wellconn/clustering.hpp"
#include "wellconn/digest.hpp"
#include "wellconn/dl.hpp"
#include "wellconn/error.hpp"
#include "wellconn/gadgets.hpp"
#include "wellconn/graph.hpp"
#include "wellconn/metrics.hpp"
#include "wellconn/treatments.hpp"
#include "wellconn_cli/manifest.hpp"

namespace wellconn::cli {

namespace {

using nlohmann::json;

class Log {
 public:
  Log(int level, const std::string& path, std::ostream& fallback) : level_(level), sink_(&fallback) {
    if (level_ > 0 && !path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open log file " + path);
      sink_ = &file_;
    }
  }

  void info(const std::string& msg) { write(1, msg); }
  void trace(const std::string& msg) { write(2, msg); }
  int level() const { return level_; }

 private:
  void write(int at, const std::string& msg) {
    if (level_ < at) return;
    std::lock_guard lock(mu_);
    *sink_ << "[wellconn] " << msg << '\n';
    sink_->flush();
  }

  int level_;
  std::ofstream file_;
  std::ostream* sink_;
  std::mutex mu_;
};

struct Common {
  unsigned workers = 1;
  std::string log_file;
  int log_level = 0;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, const char* output_flag = "--output") {
  cmd->add_option("--num-processors", c.workers, "Worker threads for per-cluster work")
      ->check(CLI::Range(1u, 4096u));
  cmd->add_option("--log-file", c.log_file, "Write log messages here instead of standard error");
  cmd->add_option("--log-level", c.log_level, "0 silent, 1 progress, 2 per-cluster trace")->check(CLI::Range(0, 2));
  if (output_flag) cmd->add_option(output_flag, c.output, "Structured report path (default: standard output)");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << render(doc);
  else write_file(path, render(doc));
}

json ingest_json(const IngestReport& r) {
  return {{"lines_read", r.lines_read},
          {"nodes", r.nodes},
          {"edges", r.edges},
          {"self_loops_dropped", r.self_loops_dropped},
          {"duplicate_edges_dropped", r.duplicate_edges_dropped}};
}

json trace_json(const TreatmentTrace& t) {
  return {{"cuts_performed", t.cuts_performed},
          {"component_splits", t.component_splits},
          {"reclusterings", t.reclusterings},
          {"max_recursion_depth", t.max_recursion_depth},
          {"clusters_in", t.clusters_in},
          {"clusters_out", t.clusters_out}};
}

struct GraphAndClustering {
  LoadedGraph loaded;
  LoadedClustering clustering;
};

GraphAndClustering load_pair(const std::string& edgelist, const std::string& clustering, Log& log) {
  GraphAndClustering r;
  r.loaded = load_edgelist_file(edgelist);
  const auto& ing = r.loaded.report;
  log.info("read " + edgelist + ": " + std::to_string(ing.nodes) + " nodes, " + std::to_string(ing.edges) +
           " edges (" + std::to_string(ing.self_loops_dropped) + " self-loops, " +
           std::to_string(ing.duplicate_edges_dropped) + " duplicates dropped)");
  const auto rows = read_assignment_file(clustering);
  r.clustering = attach_clustering(rows, r.loaded.graph);
  log.info("read " + clustering + ": " + std::to_string(rows.size()) + " assignments, " +
           std::to_string(r.clustering.clustering.size()) + " clusters");
  if (r.clustering.unknown_nodes)
    log.info(std::to_string(r.clustering.unknown_nodes) + " clustered labels absent from the edgelist kept as isolated nodes");
  return r;
}

// ---------------------------------------------------------------------------

struct TreatArgs {
  Common common;
  std::string edgelist, clustering, mode, threshold = "1log10", clusterer, sidecar;
};

int cmd_treat(const TreatArgs& a, std::ostream&, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  if (a.mode != "cm" && !a.clusterer.empty()) throw ContractViolation("--clusterer applies only to --mode cm");
  if (a.mode == "cm" && a.clusterer.empty()) throw ContractViolation("--mode cm requires --clusterer");
  const auto threshold = ThresholdSpec::parse(a.threshold);
  std::unique_ptr<Clusterer> reclusterer;
  if (a.mode == "cm") reclusterer = make_clusterer(a.clusterer);

  RunManifest manifest("treat");
  manifest.add_input("edgelist", a.edgelist);
  manifest.add_input("existing_clustering", a.clustering);
  manifest.set_threshold(threshold.to_string());
  manifest.set_workers(a.common.workers);

  auto in = load_pair(a.edgelist, a.clustering, log);
  const Graph& g = in.clustering.graph;
  const Clustering& c = in.clustering.clustering;

  TreatmentOptions opt;
  opt.workers = a.common.workers;
  if (log.level() >= 2)
    opt.on_cluster_done = [&log](ClusterId id, const TreatmentTrace& t) {
      log.trace("cluster " + std::to_string(id) + ": " + std::to_string(t.cuts_performed) + " cuts, " +
                std::to_string(t.component_splits) + " component splits, " + std::to_string(t.clusters_out) +
                " clusters out");
    };
  log.info("running " + a.mode + " with " + std::to_string(opt.workers) + " worker(s)");
  TreatmentResult res;
  if (a.mode == "cc") res = cc_treatment(g, c, opt);
  else if (a.mode == "wcc") res = wcc_treatment(g, c, threshold, opt);
  else res = cm_treatment(g, c, threshold, *reclusterer, opt);
  log.info("done: " + std::to_string(res.trace.clusters_in) + " clusters in, " +
           std::to_string(res.trace.clusters_out) + " out, " + std::to_string(res.trace.cuts_performed) + " cuts");

  std::ostringstream text;
  write_clustering(g, res.clustering, text);
  write_file(a.common.output, text.str());

  json payload = {{"mode", a.mode},
                  {"threshold", threshold.to_string()},
                  {"clusterer", reclusterer ? json(reclusterer->name()) : json(nullptr)},
                  {"ingest", ingest_json(in.loaded.report)},
                  {"unknown_nodes", in.clustering.unknown_nodes},
                  {"trace", trace_json(res.trace)},
                  {"stats_before", to_json(cluster_stats(c))},
                  {"stats_after", to_json(cluster_stats(res.clustering))},
                  {"output_sha256", sha256_hex(text.str())}};
  const std::string sidecar = a.sidecar.empty() ? a.common.output + ".json" : a.sidecar;
  write_file(sidecar, render(manifest.seal(payload)));
  log.info("wrote " + a.common.output + " and " + sidecar);
  return kOk;
}

// ---------------------------------------------------------------------------

struct AuditArgs {
  Common common;
  std::string edgelist, clustering, threshold = "1log10", table;
  std::size_t max_cut_size = 0;
};

int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  const auto threshold = ThresholdSpec::parse(a.threshold);
  RunManifest manifest("audit");
  manifest.add_input("edgelist", a.edgelist);
  manifest.add_input("clustering", a.clustering);
  manifest.set_threshold(threshold.to_string());
  manifest.set_workers(a.common.workers);

  auto in = load_pair(a.edgelist, a.clustering, log);
  AuditOptions opt;
  opt.workers = a.common.workers;
  opt.max_cut_size = a.max_cut_size;
  const auto report = connectivity_audit(in.clustering.graph, in.clustering.clustering, threshold, opt);
  log.info("well " + std::to_string(report.counts.well) + ", poor " + std::to_string(report.counts.poor) +
           ", disconnected " + std::to_string(report.counts.disconnected) + ", skipped " +
           std::to_string(report.counts.skipped) + ", singleton " + std::to_string(report.counts.singleton));

  json payload = to_json(report);
  payload["ingest"] = ingest_json(in.loaded.report);
  payload["unknown_nodes"] = in.clustering.unknown_nodes;
  if (!a.table.empty()) {
    std::ostringstream t;
    write_cluster_table(report, t);
    write_file(a.table, t.str());
  }
  emit(manifest.seal(payload), a.common.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  Common common;
  std::string truth, estimated, metrics = "nmi,ari,rmi", edgelist;
  bool restrict_common = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  const auto metrics = split_list(a.metrics);
  if (metrics.empty()) throw ContractViolation("--metrics lists no metric");
  const std::set<std::string> known = {"nmi", "ari", "agri", "rmi"};
  for (const auto& m : metrics)
    if (!known.count(m)) throw ContractViolation("unknown metric '" + m + "' (expected nmi, ari, agri or rmi)");
  const bool want_agri = std::count(metrics.begin(), metrics.end(), "agri") > 0;
  if (want_agri && a.edgelist.empty()) throw ContractViolation("agri requires --edgelist");

  RunManifest manifest("eval");
  manifest.add_input("ground_truth", a.truth);
  manifest.add_input("estimated", a.estimated);
  if (!a.edgelist.empty()) manifest.add_input("edgelist", a.edgelist);
  manifest.set_workers(a.common.workers);

  auto truth_rows = read_assignment_file(a.truth);
  auto est_rows = read_assignment_file(a.estimated);
  std::set<std::string> truth_labels, est_labels;
  for (const auto& r : truth_rows) truth_labels.insert(r.label);
  for (const auto& r : est_rows) est_labels.insert(r.label);
  std::vector<std::string> universe;
  std::set_intersection(truth_labels.begin(), truth_labels.end(), est_labels.begin(), est_labels.end(),
                        std::back_inserter(universe));
  const std::size_t only_truth = truth_labels.size() - universe.size();
  const std::size_t only_est = est_labels.size() - universe.size();
  if ((only_truth || only_est) && !a.restrict_common)
    throw MismatchError("clusterings cover different nodes (" + std::to_string(only_truth) +
                        " only in ground truth, " + std::to_string(only_est) +
                        " only in estimate); pass --restrict-common to compare the shared nodes");
  const std::set<std::string> keep(universe.begin(), universe.end());
  auto restrict = [&](std::vector<AssignmentRow>& rows) {
    std::erase_if(rows, [&](const AssignmentRow& r) { return !keep.count(r.label); });
  };
  restrict(truth_rows);
  restrict(est_rows);

  // The metric universe is exactly the shared labels; graph nodes outside it are dropped.
  Graph g;
  if (!a.edgelist.empty()) {
    Graph full = load_edgelist_file(a.edgelist).graph;
    std::vector<std::string> missing;
    for (const auto& l : universe)
      if (!full.find(l)) missing.push_back(l);
    if (!missing.empty()) full = std::move(full).with_isolated_nodes(missing);
    std::vector<NodeId> nodes;
    for (const auto& l : universe) nodes.push_back(*full.find(l));
    std::sort(nodes.begin(), nodes.end());
    g = induced_subgraph(full, nodes, Labels::Keep).graph;
  } else {
    g = Graph::from_edges(static_cast<NodeId>(universe.size()), {}, universe);
  }
  const Clustering truth = attach_clustering(truth_rows, g).clustering;
  const Clustering est = attach_clustering(est_rows, g).clustering;
  log.info("comparing " + std::to_string(truth.size()) + " ground-truth clusters with " +
           std::to_string(est.size()) + " estimated clusters over " + std::to_string(g.n()) + " nodes");

  json scores = json::object();
  for (const auto& m : metrics) {
    if (m == "nmi") {
      scores["nmi"] = {{"value", nmi(truth, est)}, {"normalization", "arithmetic mean of entropies"}, {"log_base", 2}};
    } else if (m == "ari") {
      scores["ari"] = {{"value", ari(truth, est)}, {"pairs", "all unordered node pairs"}};
    } else if (m == "agri") {
      scores["agri"] = {{"value", agri(g, truth, est)}, {"pairs", "graph edges"}, {"edges", g.m()}};
    } else {
      const auto norm = rmi(truth, est, true);
      const auto raw = rmi(truth, est, false);
      scores["rmi"] = {{"value", norm.value},
                       {"normalization", "divided by ground truth against itself"},
                       {"unnormalized", raw.value},
                       {"mutual_information", raw.mutual_information},
                       {"log2_table_count", raw.log2_table_count},
                       {"table_count_method", to_string(norm.method)},
                       {"log_base", 2},
                       {"unit", "bits per node"}};
    }
  }
  json payload = {{"nodes", g.n()},
                  {"ground_truth_clusters", truth.size()},
                  {"estimated_clusters", est.size()},
                  {"restricted_to_common", a.restrict_common},
                  {"dropped_ground_truth_only", only_truth},
                  {"dropped_estimated_only", only_est},
                  {"scores", scores}};
  emit(manifest.seal(payload), a.common.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct DlArgs {
  Common common;
  std::string edgelist, clustering, before, after, corpus;
};

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int cmd_dl(const DlArgs& a, std::ostream& out, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  const bool native = !a.edgelist.empty() || !a.clustering.empty();
  const bool pair = !a.before.empty() || !a.after.empty();
  if (native && (a.edgelist.empty() || a.clustering.empty()))
    throw ContractViolation("-log p(e) needs both --edgelist and --clustering");
  if (pair && (a.before.empty() || a.after.empty()))
    throw ContractViolation("a diff report needs both --components-before and --components-after");
  if (!native && !pair && a.corpus.empty())
    throw ContractViolation("nothing to do: give --edgelist/--clustering, component files or --corpus");

  RunManifest manifest("dl");
  manifest.set_workers(a.common.workers);
  json payload = json::object();

  if (native) {
    manifest.add_input("edgelist", a.edgelist);
    manifest.add_input("clustering", a.clustering);
    auto in = load_pair(a.edgelist, a.clustering, log);
    const double pe = dl::pe_for_clustering(in.clustering.graph, in.clustering.clustering);
    payload["log_p_e"] = {{"value", pe},
                          {"unit", dl::kNats},
                          {"bits", pe / std::log(2.0)},
                          {"blocks", in.clustering.clustering.size()},
                          {"edges", in.clustering.graph.m()}};
  }
  if (pair) {
    manifest.add_input("components_before", a.before);
    manifest.add_input("components_after", a.after);
    const auto before = dl::components_from_json(read_json_file(a.before));
    const auto after = dl::components_from_json(read_json_file(a.after));
    const auto d = dl::diff(before, after);
    payload["before"] = dl::to_json(before);
    payload["before"]["total"] = dl::compose(before);
    payload["after"] = dl::to_json(after);
    payload["after"]["total"] = dl::compose(after);
    payload["diff"] = dl::to_json(d);
    log.info("preferred: " + dl::to_string(d.preference) + ", without -log p(e): " +
             dl::to_string(d.preference_without_pe));
  }
  if (!a.corpus.empty()) {
    manifest.add_input("corpus", a.corpus);
    const json doc = read_json_file(a.corpus);
    if (!doc.is_array()) throw ParseError(a.corpus + ": corpus must be a JSON array");
    std::vector<dl::DiffReport> reports;
    for (const auto& entry : doc) {
      if (!entry.is_object() || !entry.contains("untreated") || !entry.contains("treated"))
        throw ParseError(a.corpus + ": each corpus entry needs 'untreated' and 'treated'");
      reports.push_back(
          dl::diff(dl::components_from_json(entry.at("untreated")), dl::components_from_json(entry.at("treated"))));
    }
    const auto t = dl::tally(reports);
    payload["tally"] = {{"cases", t.cases},
                        {"untreated_preferred", t.untreated_preferred},
                        {"flipped", t.flipped},
                        {"flipped_fraction", t.flipped_fraction()}};
  }
  emit(manifest.seal(payload), a.common.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  Common common;
  std::string clustering, edgelist;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  RunManifest manifest("stats");
  manifest.add_input("clustering", a.clustering);
  manifest.set_workers(a.common.workers);
  const auto rows = read_assignment_file(a.clustering);
  Graph g;
  if (!a.edgelist.empty()) {
    manifest.add_input("edgelist", a.edgelist);
    g = load_edgelist_file(a.edgelist).graph;
  }
  const auto loaded = attach_clustering(rows, std::move(g));
  const auto& c = loaded.clustering;
  json payload = to_json(cluster_stats(c));
  payload["nodes"] = c.n();
  payload["clusters"] = c.size();
  payload["unknown_nodes"] = a.edgelist.empty() ? json(nullptr) : json(loaded.unknown_nodes);
  emit(manifest.seal(payload), a.common.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  Common common;
  std::string kind, edgelist_out, clustering_out;
  std::uint32_t cliques = 0, clique_size = 0, bridges = 0, min_cluster = 0, max_cluster = 0;
  NodeId nodes = 0;
  double internal_degree = 0, external_degree = 0, p = 0;
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Log log(a.common.log_level, a.common.log_file, err);
  GadgetSpec spec;
  if (a.kind == "clique-ring") spec = GadgetSpec::clique_ring(a.cliques, a.clique_size, a.bridges);
  else if (a.kind == "bridged-cliques") spec = GadgetSpec::bridged_cliques(a.cliques, a.clique_size, a.bridges, a.seed);
  else if (a.kind == "planted-partition-lite")
    spec = GadgetSpec::planted_partition_lite(a.nodes, a.min_cluster, a.max_cluster, a.internal_degree,
                                              a.external_degree, a.seed);
  else spec = GadgetSpec::random_gnp(a.nodes, a.p, a.seed);

  RunManifest manifest("generate");
  manifest.set_workers(a.common.workers);
  const auto gen = generate(spec);
  std::ostringstream edges, clusters;
  write_edgelist(gen.graph, edges);
  write_clustering(gen.graph, gen.truth, clusters);
  write_file(a.edgelist_out, edges.str());
  write_file(a.clustering_out, clusters.str());
  log.info("generated " + spec.describe() + ": " + std::to_string(gen.graph.n()) + " nodes, " +
           std::to_string(gen.graph.m()) + " edges");

  json payload = {{"spec", spec.describe()},
                  {"nodes", gen.graph.n()},
                  {"edges", gen.graph.m()},
                  {"clusters", gen.truth.size()},
                  {"edgelist_sha256", sha256_hex(edges.str())},
                  {"clustering_sha256", sha256_hex(clusters.str())}};
  emit(manifest.seal(payload), a.common.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster connectivity auditing and post-processing", "wellconn"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  TreatArgs treat;
  auto* t = app.add_subcommand("treat", "Apply the cc, wcc or cm treatment to a clustering");
  t->add_option("--edgelist", treat.edgelist, "Tab-separated edgelist")->required()->check(CLI::ExistingFile);
  t->add_option("--existing-clustering", treat.clustering, "Clustering to treat")->required()->check(CLI::ExistingFile);
  t->add_option("--mode", treat.mode, "Treatment")->required()->check(CLI::IsMember({"cc", "wcc", "cm"}));
  t->add_option("--threshold", treat.threshold, "Cut bound: <c>log10, an integer, or 'connected'")
      ->capture_default_str();
  t->add_option("--clusterer", treat.clusterer, "cm re-clusterer: identity, components or external:\"<command>\"");
  t->add_option("--sidecar", treat.sidecar, "Trace and manifest document (default: <output-file>.json)");
  add_common(t, treat.common, nullptr);
  t->add_option("--output-file", treat.common.output, "Treated clustering")->required();

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Classify clusters as well connected, poorly connected or disconnected");
  au->add_option("--edgelist", audit.edgelist)->required()->check(CLI::ExistingFile);
  au->add_option("--clustering", audit.clustering)->required()->check(CLI::ExistingFile);
  au->add_option("--threshold", audit.threshold)->capture_default_str();
  au->add_option("--table", audit.table, "Per-cluster tab-separated table");
  au->add_option("--max-cut-size", audit.max_cut_size, "Skip min cuts of clusters larger than this (0: no cap)");
  add_common(au, audit.common);

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Score an estimated clustering against ground truth");
  ev->add_option("--ground-truth", eval.truth)->required()->check(CLI::ExistingFile);
  ev->add_option("--estimated", eval.estimated)->required()->check(CLI::ExistingFile);
  ev->add_option("--metrics", eval.metrics, "Comma list of nmi, ari, agri, rmi")->capture_default_str();
  ev->add_option("--edgelist", eval.edgelist, "Required for agri")->check(CLI::ExistingFile);
  ev->add_flag("--restrict-common", eval.restrict_common, "Compare only nodes present in both files");
  add_common(ev, eval.common);

  DlArgs dlargs;
  auto* d = app.add_subcommand("dl", "Description-length accounting");
  d->add_option("--edgelist", dlargs.edgelist)->check(CLI::ExistingFile);
  d->add_option("--clustering", dlargs.clustering)->check(CLI::ExistingFile);
  d->add_option("--components-before", dlargs.before, "Components of the untreated clustering")
      ->check(CLI::ExistingFile);
  d->add_option("--components-after", dlargs.after, "Components of the treated clustering")->check(CLI::ExistingFile);
  d->add_option("--corpus", dlargs.corpus, "JSON array of {untreated, treated} component pairs")
      ->check(CLI::ExistingFile);
  add_common(d, dlargs.common);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Node coverage and cluster-size statistics");
  s->add_option("--clustering", stats.clustering)->required()->check(CLI::ExistingFile);
  s->add_option("--edgelist", stats.edgelist, "Count unclustered graph nodes as singletons")->check(CLI::ExistingFile);
  add_common(s, stats.common);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic graph and its planted clustering");
  g->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"clique-ring", "bridged-cliques", "planted-partition-lite", "random-gnp"}));
  g->add_option("--cliques", gen.cliques);
  g->add_option("--clique-size", gen.clique_size);
  g->add_option("--bridges", gen.bridges);
  g->add_option("--nodes", gen.nodes);
  g->add_option("--min-cluster", gen.min_cluster);
  g->add_option("--max-cluster", gen.max_cluster);
  g->add_option("--internal-degree", gen.internal_degree);
  g->add_option("--external-degree", gen.external_degree);
  g->add_option("--p", gen.p, "Edge probability");
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--edgelist-out", gen.edgelist_out)->required();
  g->add_option("--clustering-out", gen.clustering_out)->required();
  add_common(g, gen.common);

  std::vector<char*> argv;
  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("wellconn");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (t->parsed()) return cmd_treat(treat, out, err);
    if (au->parsed()) return cmd_audit(audit, out, err);
    if (ev->parsed()) return cmd_eval(eval, out, err);
    if (d->parsed()) return cmd_dl(dlargs, out, err);
    if (s->parsed()) return cmd_stats(stats, out, err);
    return cmd_generate(gen, out, err);
  } catch (const ClustererError& e) {
    err << "wellconn: clusterer failed: " << e.what() << '\n';
    return kExternalToolError;
  } catch (const std::exception& e) {
    err << "wellconn: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace wellconn::cli
