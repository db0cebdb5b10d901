#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wellconn/dl.hpp"
#include "wellconn/error.hpp"
#include "wellconn/gadgets.hpp"
#include "wellconn/treatments.hpp"

using namespace wellconn;
using dl::Components;

namespace {

// Component values printed for the linux network: clustering as found,
// then after the connectivity treatment.
const Components kLinuxUntreated = Components::uniform(699, 96, 147, 51, "k");
const Components kLinuxTreated = Components::uniform(316, 45, 257, 1585, "k");

}  // namespace

TEST(Compose, LinuxTableTotals) {
  EXPECT_DOUBLE_EQ(dl::compose(kLinuxUntreated), 993.0);
  // Printed as 2,202: the components are themselves rounded.
  EXPECT_NEAR(dl::compose(kLinuxTreated), 2202.0, 1.0);
}

TEST(Diff, LinuxTablePreferenceFlipsWithoutTheEdgeTerm) {
  const auto d = dl::diff(kLinuxUntreated, kLinuxTreated);
  EXPECT_DOUBLE_EQ(d.d_log_pe, 1534.0);
  EXPECT_DOUBLE_EQ(d.total, 1210.0);
  EXPECT_EQ(d.preference, dl::Side::Untreated);
  EXPECT_EQ(d.preference_without_pe, dl::Side::Treated);
  EXPECT_TRUE(d.flipped);
  EXPECT_EQ(d.unit, "k");
}

TEST(Diff, MixedUnitsAreRejected) {
  EXPECT_THROW(dl::diff(Components::uniform(1, 1, 1, 1, "bits"), Components::uniform(1, 1, 1, 1, "nats")),
               MismatchError);
  auto mixed = Components::uniform(1, 1, 1, 1, "nats");
  mixed.log_pk.unit = "bits";
  EXPECT_THROW(dl::compose(mixed), MismatchError);
  EXPECT_THROW(dl::compose(Components::uniform(1, -1, 1, 1)), ContractViolation);
  EXPECT_THROW(dl::compose(Components::uniform(1, NAN, 1, 1)), ContractViolation);
}

TEST(Convert, NatsAndBitsRoundTrip) {
  const auto bits = dl::convert(Components::uniform(std::log(2.0), 0, 2 * std::log(2.0), 1), dl::kBits);
  EXPECT_NEAR(bits.log_pA.value, 1.0, 1e-15);
  EXPECT_NEAR(bits.log_pb.value, 2.0, 1e-15);
  const auto back = dl::convert(bits, dl::kNats);
  EXPECT_NEAR(back.log_pe.value, 1.0, 1e-15);
  EXPECT_THROW(dl::convert(kLinuxUntreated, dl::kBits), MismatchError);
}

TEST(Tally, FlippedFractionEqualsRecount) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> value(0, 100);
  std::vector<dl::DiffReport> reports;
  std::size_t preferred = 0, flipped = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = Components::uniform(value(rng), value(rng), value(rng), value(rng));
    const auto b = Components::uniform(value(rng), value(rng), value(rng), value(rng));
    reports.push_back(dl::diff(a, b));
    const double ta = dl::compose(a), tb = dl::compose(b);
    if (ta < tb) {
      ++preferred;
      flipped += (ta - a.log_pe.value) > (tb - b.log_pe.value);
    }
  }
  const auto t = dl::tally(reports);
  EXPECT_EQ(t.cases, 500u);
  EXPECT_EQ(t.untreated_preferred, preferred);
  EXPECT_EQ(t.flipped, flipped);
  EXPECT_DOUBLE_EQ(t.flipped_fraction(), double(flipped) / double(preferred));
}

TEST(Tally, FiftyNineOfSeventyOneIsTheReportedShare) {
  std::vector<dl::DiffReport> reports(71);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    reports[i].preference = dl::Side::Untreated;
    reports[i].preference_without_pe = i < 59 ? dl::Side::Treated : dl::Side::Untreated;
  }
  EXPECT_NEAR(100 * dl::tally(reports).flipped_fraction(), 83.1, 0.05);
}

TEST(LogPe, SingleBlockCostsNothing) {
  for (std::uint64_t e : {0ull, 1ull, 1'000'000ull}) EXPECT_EQ(dl::log_p_e(1, e), 0.0);
  EXPECT_THROW(dl::log_p_e(0, 3), ContractViolation);
}

TEST(LogPe, TriangleOfSingletons) {
  EXPECT_NEAR(dl::log_p_e(3, 3), std::log(56.0), 1e-13);
  const Graph triangle = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_NEAR(dl::pe_for_clustering(triangle, Clustering::singletons(3)), std::log(56.0), 1e-13);
  EXPECT_EQ(dl::pe_for_clustering(triangle, Clustering::single(3)), 0.0);
}

TEST(LogPe, AgreesWithExactBinomial) {
  for (std::uint64_t b : {1ull, 2ull, 3ull, 7ull, 20ull, 64ull, 100ull})
    for (std::uint64_t e : {0ull, 1ull, 5ull, 100ull, 4096ull, 4097ull, 30'000ull, 100'000ull}) {
      const std::uint64_t k = b * (b + 1) / 2;
      const double exact = oracle::log_binomial_exact(k + e - 1, e);
      const double got = dl::log_p_e(b, e);
      if (exact == 0.0) EXPECT_EQ(got, 0.0);
      else EXPECT_NEAR(got, exact, 1e-9 * exact) << "B=" << b << " E=" << e;
    }
}

TEST(LogPe, StrictlyIncreasingInBlocks) {
  for (std::uint64_t e : {1ull, 100ull, 100'000ull}) {
    double previous = dl::log_p_e(1, e);
    for (std::uint64_t b = 2; b <= 10'000; ++b) {
      const double now = dl::log_p_e(b, e);
      ASSERT_GT(now, previous) << "B=" << b << " E=" << e;
      previous = now;
    }
  }
}

TEST(LogPe, IncrementsShrinkOnceBlockPairsOutnumberEdges) {
  for (std::uint64_t e : {1ull, 100ull, 100'000ull}) {
    double last_step = INFINITY;
    for (std::uint64_t b = 1; b < 10'000; ++b) {
      if (b * (b + 1) / 2 < e) continue;
      const double step = dl::log_p_e(b + 1, e) - dl::log_p_e(b, e);
      ASSERT_GT(step, 0.0);
      ASSERT_LT(step, last_step) << "B=" << b << " E=" << e;
      last_step = step;
    }
  }
}

TEST(LogPe, IncrementsGrowWhileEdgesOutnumberBlockPairs) {
  // With E much larger than B(B+1)/2 each extra block adds more than the last.
  const std::uint64_t e = 100'000;
  EXPECT_LT(dl::log_p_e(2, e) - dl::log_p_e(1, e), dl::log_p_e(3, e) - dl::log_p_e(2, e));
}

TEST(LogPe, GrowsWhenCcSplitsAnyCluster) {
  std::mt19937_64 rng(19);
  int split = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto inst = oracle::random_instance(rng, 2, 80, 0.04, 5);
    const auto cc = cc_treatment(inst.graph, inst.clustering);
    if (cc.trace.component_splits == 0) continue;
    if (inst.graph.m() == 0) {
      // With no edges every block count gives the single empty placement.
      EXPECT_EQ(dl::pe_for_clustering(inst.graph, cc.clustering), 0.0);
      continue;
    }
    ++split;
    EXPECT_GT(dl::pe_for_clustering(inst.graph, cc.clustering), dl::pe_for_clustering(inst.graph, inst.clustering));
  }
  EXPECT_GT(split, 20);
}

TEST(ComponentsJson, DocumentUnitAndPerTermOverrides) {
  const auto doc = nlohmann::json::parse(R"({"unit": "bits", "log_pA": 1, "log_pk": 2, "log_pb": 3,
                                             "log_pe": {"value": 4, "unit": "nats"}})");
  const auto c = dl::components_from_json(doc);
  EXPECT_EQ(c.log_pA.unit, "bits");
  EXPECT_EQ(c.log_pe.unit, "nats");
  EXPECT_THROW(c.unit(), MismatchError);
  EXPECT_THROW(dl::components_from_json(nlohmann::json::parse(R"({"log_pA": 1})")), ParseError);
  const auto round = dl::components_from_json(dl::to_json(kLinuxTreated));
  EXPECT_DOUBLE_EQ(dl::compose(round), dl::compose(kLinuxTreated));
  EXPECT_EQ(round.unit(), "k");
}
