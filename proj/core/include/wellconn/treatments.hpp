#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wellconn/clustering.hpp"
#include "wellconn/graph.hpp"

namespace wellconn {

/// Re-partitions one part of a split cluster. Implementations must return a
/// Clustering over exactly the part's nodes and be safe to call from several
/// threads at once.
class Clusterer {
 public:
  virtual ~Clusterer() = default;
  virtual Clustering cluster(const Graph& part) const = 0;
  virtual std::string name() const = 0;
  /// Whether cluster() needs the part's node labels.
  virtual bool needs_labels() const { return false; }
};

/// Keeps the part as one cluster. CM with this clusterer is WCC.
class IdentityClusterer final : public Clusterer {
 public:
  Clustering cluster(const Graph& part) const override;
  std::string name() const override { return "identity"; }
};

/// Splits the part into its connected components.
class ComponentsClusterer final : public Clusterer {
 public:
  Clustering cluster(const Graph& part) const override;
  std::string name() const override { return "components"; }
};

/// Runs an external program on each part.
///
/// The part is written as a tab-separated edgelist to a temporary file and
/// the command template is tokenised on whitespace (double quotes group).
/// Tokens "{input}" and "{output}" are replaced by the edgelist path and the
/// path the program must write its "label<TAB>cluster" file to. Nodes the
/// program omits, including isolated nodes that cannot appear in an
/// edgelist, become singletons.
class ExternalClusterer final : public Clusterer {
 public:
  explicit ExternalClusterer(std::string command_template);
  Clustering cluster(const Graph& part) const override;
  std::string name() const override { return "external:" + template_; }
  bool needs_labels() const override { return true; }

  static std::vector<std::string> tokenize(const std::string& command_template);

 private:
  std::string template_;
  std::vector<std::string> argv_;
};

/// Parses "identity", "components" or "external:<command template>".
std::unique_ptr<Clusterer> make_clusterer(const std::string& spec);

struct TreatmentTrace {
  std::size_t cuts_performed = 0;
  std::size_t component_splits = 0;
  std::size_t reclusterings = 0;
  std::size_t max_recursion_depth = 0;
  std::size_t clusters_in = 0;
  std::size_t clusters_out = 0;

  void absorb(const TreatmentTrace& other);
};

struct TreatmentResult {
  Clustering clustering;
  TreatmentTrace trace;
};

struct TreatmentOptions {
  unsigned workers = 1;
  /// Called with the original cluster id after each input cluster finishes;
  /// may be invoked from worker threads.
  std::function<void(ClusterId, const TreatmentTrace&)> on_cluster_done;
  /// Follow runs of single-node cuts incrementally instead of recomputing
  /// each minimum cut from scratch. Output and trace are identical either way.
  bool incremental_peeling = true;
};

/// Replaces every cluster by the connected components of its induced subgraph.
TreatmentResult cc_treatment(const Graph& g, const Clustering& c, const TreatmentOptions& opt = {});

/// Splits clusters along minimum cuts until every non-singleton piece is
/// connected with a cut strictly above the threshold. Never re-clusters and
/// never drops clusters.
TreatmentResult wcc_treatment(const Graph& g, const Clustering& c, const ThresholdSpec& t,
                              const TreatmentOptions& opt = {});

/// Like wcc_treatment, but each part produced by a split is re-partitioned by
/// `reclusterer` and every resulting cluster is tested again.
TreatmentResult cm_treatment(const Graph& g, const Clustering& c, const ThresholdSpec& t, const Clusterer& reclusterer,
                             const TreatmentOptions& opt = {});

}  // namespace wellconn
