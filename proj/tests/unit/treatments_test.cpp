#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "wellconn/error.hpp"
#include "wellconn/gadgets.hpp"
#include "wellconn/mincut.hpp"
#include "wellconn/treatments.hpp"

using namespace wellconn;

namespace {

const ThresholdSpec kDefault = ThresholdSpec::log10_multiple(1);

Generated two_k10() { return generate(GadgetSpec::bridged_cliques(2, 10, 1, 1)); }

// Every non-singleton cluster is connected with a cut above the bound,
// checked by enumeration for small clusters.
void expect_well_connected(const oracle::Instance& inst, const Clustering& c, const ThresholdSpec& t) {
  for (const auto& members : c.clusters()) {
    if (members.size() < 2) continue;
    std::uint64_t cut;
    if (members.size() <= 14) {
      cut = oracle::induced_min_cut(inst.edges, members);
    } else {
      const Subgraph sub = induced_subgraph(inst.graph, members);
      ASSERT_TRUE(is_connected(sub.graph));
      cut = global_min_cut(sub.graph).value;
    }
    EXPECT_GT(static_cast<double>(cut), t.bound(members.size())) << "cluster of " << members.size();
  }
}

class FixedSizeClusterer final : public Clusterer {
 public:
  Clustering cluster(const Graph& part) const override { return Clustering::single(part.n() + 1); }
  std::string name() const override { return "broken"; }
};

}  // namespace

TEST(Wcc, TwoCliqueGadgetSplitsAtTheBridge) {
  const auto gen = two_k10();
  const auto result = wcc_treatment(gen.graph, Clustering::single(20), kDefault);
  EXPECT_EQ(result.clustering, gen.truth);
  EXPECT_EQ(result.trace.cuts_performed, 1u);
  EXPECT_EQ(result.trace.clusters_out, 2u);
}

TEST(Cc, KeepsConnectedClustersAndSplitsDisconnectedOnes) {
  const auto bridged = two_k10();
  EXPECT_EQ(cc_treatment(bridged.graph, Clustering::single(20)).clustering, Clustering::single(20));
  const auto apart = generate(GadgetSpec::clique_ring(2, 5, 0));
  const auto r = cc_treatment(apart.graph, Clustering::single(10));
  EXPECT_EQ(r.clustering, apart.truth);
  EXPECT_EQ(r.trace.component_splits, 1u);
}

TEST(Wcc, OutputIsWellConnectedOnRandomInstances) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = oracle::random_instance(rng, 2, 60, 0.25, 5);
    const auto out = wcc_treatment(inst.graph, inst.clustering, kDefault).clustering;
    expect_well_connected(inst, out, kDefault);
  }
}

TEST(Wcc, RefinesCcWhichRefinesTheInput) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = oracle::random_instance(rng, 2, 120, 0.08, 8);
    const auto cc = cc_treatment(inst.graph, inst.clustering).clustering;
    const auto wcc = wcc_treatment(inst.graph, inst.clustering, kDefault).clustering;
    EXPECT_TRUE(is_refinement(cc, inst.clustering));
    EXPECT_TRUE(is_refinement(wcc, cc));
    EXPECT_LE(node_coverage(wcc), node_coverage(cc));
    EXPECT_LE(node_coverage(cc), node_coverage(inst.clustering));
    EXPECT_EQ(cc_treatment(inst.graph, cc).clustering, cc);
    EXPECT_EQ(wcc_treatment(inst.graph, wcc, kDefault).clustering, wcc);
  }
}

TEST(Wcc, ConnectivityOnlyThresholdEqualsCc) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = oracle::random_instance(rng, 2, 80, 0.05, 6);
    EXPECT_EQ(wcc_treatment(inst.graph, inst.clustering, ThresholdSpec::connectivity_only()).clustering,
              cc_treatment(inst.graph, inst.clustering).clustering);
  }
}

TEST(Cm, IdentityClustererReproducesWcc) {
  std::mt19937_64 rng(31);
  const IdentityClusterer identity;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = oracle::random_instance(rng, 2, 100, 0.1, 10);
    EXPECT_EQ(cm_treatment(inst.graph, inst.clustering, kDefault, identity).clustering,
              wcc_treatment(inst.graph, inst.clustering, kDefault).clustering);
  }
}

TEST(Cm, ComponentsClustererOnTheGadgetMatchesWcc) {
  const auto gen = two_k10();
  const ComponentsClusterer components;
  const auto r = cm_treatment(gen.graph, Clustering::single(20), kDefault, components);
  EXPECT_EQ(r.clustering, gen.truth);
  EXPECT_EQ(r.trace.reclusterings, 2u);
}

TEST(Cm, ClustererReturningTheWrongUniverseIsAnError) {
  const auto gen = two_k10();
  EXPECT_THROW(cm_treatment(gen.graph, Clustering::single(20), kDefault, FixedSizeClusterer{}), ClustererError);
}

TEST(Treatments, RejectClusteringsOfAnotherGraph) {
  const auto gen = two_k10();
  EXPECT_THROW(wcc_treatment(gen.graph, Clustering::single(19), kDefault), MismatchError);
  EXPECT_THROW(cc_treatment(gen.graph, Clustering::single(21)), MismatchError);
}

TEST(Treatments, WorkerCountDoesNotChangeTheResult) {
  std::mt19937_64 rng(37);
  const ComponentsClusterer components;
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = oracle::random_instance(rng, 50, 150, 0.06, 12);
    TreatmentOptions one, many;
    many.workers = 16;
    const auto a = wcc_treatment(inst.graph, inst.clustering, kDefault, one);
    const auto b = wcc_treatment(inst.graph, inst.clustering, kDefault, many);
    EXPECT_EQ(a.clustering, b.clustering);
    EXPECT_EQ(a.trace.cuts_performed, b.trace.cuts_performed);
    EXPECT_EQ(a.trace.max_recursion_depth, b.trace.max_recursion_depth);
    EXPECT_EQ(cm_treatment(inst.graph, inst.clustering, kDefault, components, one).clustering,
              cm_treatment(inst.graph, inst.clustering, kDefault, components, many).clustering);
  }
}

TEST(Treatments, IncrementalPeelingMatchesRecomputationExactly) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto gen = generate(GadgetSpec::planted_partition_lite(3000, 100, 1500, 7.0, 1.0, seed));
    const Clustering start = cc_treatment(gen.graph, gen.truth).clustering;
    for (const auto& t : {kDefault, ThresholdSpec::constant(3), ThresholdSpec::log10_multiple(2)}) {
      TreatmentOptions fast, slow;
      slow.incremental_peeling = false;
      const auto a = wcc_treatment(gen.graph, start, t, fast);
      const auto b = wcc_treatment(gen.graph, start, t, slow);
      ASSERT_EQ(a.clustering, b.clustering) << "seed " << seed << " " << t.to_string();
      EXPECT_EQ(a.trace.cuts_performed, b.trace.cuts_performed);
      EXPECT_EQ(a.trace.component_splits, b.trace.component_splits);
      EXPECT_EQ(a.trace.max_recursion_depth, b.trace.max_recursion_depth);
    }
  }
}

TEST(Treatments, ProgressCallbackSeesEveryInputCluster) {
  std::mt19937_64 rng(41);
  const auto inst = oracle::random_instance(rng, 60, 60, 0.1, 7);
  std::vector<int> seen(inst.clustering.size(), 0);
  std::mutex mu;
  TreatmentOptions opt;
  opt.workers = 4;
  opt.on_cluster_done = [&](ClusterId id, const TreatmentTrace&) {
    std::lock_guard lock(mu);
    ++seen[id];
  };
  wcc_treatment(inst.graph, inst.clustering, kDefault, opt);
  for (int s : seen) EXPECT_EQ(s, 1);
}

// ---------------------------------------------------------------------------

namespace {

class ScriptDir {
 public:
  ScriptDir() : dir_(std::filesystem::temp_directory_path() / ("wellconn-ext-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~ScriptDir() { std::filesystem::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST(ExternalClusterer, TokenizerHonoursQuotes) {
  EXPECT_EQ(ExternalClusterer::tokenize("tool -a  \"two words\" {input}"),
            (std::vector<std::string>{"tool", "-a", "two words", "{input}"}));
}

TEST(ExternalClusterer, ComponentsScriptBehavesLikeTheComponentsClusterer) {
  ScriptDir dir;
  // Union-find over the edgelist in awk; each label's root names its cluster.
  const auto script = dir.write("components.sh", R"(#!/bin/sh
awk -F'\t' '
function find(x) { while (p[x] != x) x = p[x]; return x }
{ if (!($1 in p)) p[$1] = $1; if (!($2 in p)) p[$2] = $2; a = find($1); b = find($2); if (a != b) p[a] = b }
END { for (x in p) print x "\t" find(x) }' "$1" > "$2"
)");
  const ExternalClusterer ext("sh " + script + " {input} {output}");
  const ComponentsClusterer components;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = oracle::random_instance(rng, 20, 60, 0.12, 3);
    EXPECT_EQ(cm_treatment(inst.graph, inst.clustering, kDefault, ext).clustering,
              cm_treatment(inst.graph, inst.clustering, kDefault, components).clustering);
  }
}

TEST(ExternalClusterer, FailuresNameThePart) {
  ScriptDir dir;
  const auto fails = dir.write("fails.sh", "exit 3\n");
  const auto garbage = dir.write("garbage.sh", "printf 'only-one-column\\n' > \"$2\"\n");
  const auto stranger = dir.write("stranger.sh", "printf 'nobody\\t1\\n' > \"$2\"\n");
  const auto gen = two_k10();
  for (const auto& s : {fails, garbage, stranger}) {
    const ExternalClusterer ext("sh " + s + " {input} {output}");
    try {
      cm_treatment(gen.graph, Clustering::single(20), kDefault, ext);
      FAIL() << s;
    } catch (const ClustererError& e) {
      EXPECT_NE(std::string(e.what()).find("10 nodes"), std::string::npos) << e.what();
    }
  }
}

TEST(MakeClusterer, ParsesSpecifications) {
  EXPECT_EQ(make_clusterer("identity")->name(), "identity");
  EXPECT_EQ(make_clusterer("components")->name(), "components");
  EXPECT_EQ(make_clusterer("external:tool {input} {output}")->name(), "external:tool {input} {output}");
  EXPECT_ANY_THROW(make_clusterer("leiden"));
  EXPECT_ANY_THROW(make_clusterer("external:"));
}
