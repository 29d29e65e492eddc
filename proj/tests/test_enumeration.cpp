#include <gtest/gtest.h>

#include <set>

#include "fivecycles/canonical.hpp"
#include "fivecycles/connectivity.hpp"
#include "fivecycles/enumeration.hpp"
#include "fivecycles/formats.hpp"
#include "fivecycles/report.hpp"
#include "oracles.hpp"

namespace {

using namespace fivecycles;

// Each generated graph matches exactly one brute-force class, and vice versa.
void expect_same_classes(const std::vector<CubicGraph>& generated, const std::vector<CubicGraph>& brute) {
  ASSERT_EQ(generated.size(), brute.size());
  std::vector<bool> hit(brute.size(), false);
  for (const auto& g : generated) {
    int matches = 0;
    for (std::size_t i = 0; i < brute.size(); ++i) {
      if (oracle::isomorphic(g, brute[i])) {
        ++matches;
        hit[i] = true;
      }
    }
    EXPECT_EQ(matches, 1);
  }
  EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST(Generate, SmallSimpleCounts) {
  const auto four = generate_cubic_graphs(4, false);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(four[0], complete4()));
  const auto six = generate_cubic_graphs(6, false);
  ASSERT_EQ(six.size(), 2u);
  EXPECT_TRUE(oracle::isomorphic(six[0], complete_bipartite33()) != oracle::isomorphic(six[1], complete_bipartite33()));
  EXPECT_TRUE(oracle::isomorphic(six[0], prism()) != oracle::isomorphic(six[1], prism()));
  EXPECT_EQ(generate_cubic_graphs(10, false).size(), 19u);
}

TEST(Generate, KnownCountsThroughFourteenVertices) {
  const std::vector<std::size_t> simple{1, 2, 5, 19, 85, 509};
  for (int n = 4, i = 0; n <= 14; n += 2, ++i) EXPECT_EQ(generate_cubic_graphs(n, false).size(), simple[i]) << n;
  const std::vector<std::size_t> multi{1, 2, 6, 20, 91};
  for (int n = 2, i = 0; n <= 10; n += 2, ++i) EXPECT_EQ(generate_cubic_graphs(n, true).size(), multi[i]) << n;
}

TEST(Generate, MatchesBruteForceClasses) {
  for (int n = 4; n <= 10; n += 2) expect_same_classes(generate_cubic_graphs(n, false), oracle::cubic_classes(n, false));
  for (int n = 2; n <= 8; n += 2) expect_same_classes(generate_cubic_graphs(n, true), oracle::cubic_classes(n, true));
}

TEST(Generate, OutputIsCanonicalConnectedAndDistinct) {
  for (bool multi : {false, true}) {
    for (int n = 2; n <= (multi ? 10 : 12); n += 2) {
      std::set<std::string> certificates;
      for (const auto& g : generate_cubic_graphs(n, multi)) {
        EXPECT_TRUE(oracle::connected(g));
        EXPECT_EQ(g.is_simple() || multi, true);
        EXPECT_EQ(g, canonical_graph(g));
        EXPECT_TRUE(certificates.insert(canonical_form(g).certificate).second);
      }
    }
  }
}

TEST(Generate, SimpleTwoVertexGraphsDoNotExist) { EXPECT_TRUE(generate_cubic_graphs(2, false).empty()); }

TEST(Generate, BoundsAreEnforced) {
  EXPECT_THROW(generate_cubic_graphs(3, false), EnumerationError);
  EXPECT_THROW(generate_cubic_graphs(0, true), EnumerationError);
  EXPECT_THROW(generate_cubic_graphs(16, false), EnumerationError);
  EXPECT_THROW(generate_cubic_graphs(12, true), EnumerationError);
  EXPECT_NO_THROW(check_order(16, false, GeneratorLimits{16, 10}));
}

TEST(FilterBridgeless, NamedCases) {
  const std::vector<CubicGraph> in{complete4(), bridged_pair(), triple_edge()};
  const auto out = filter_bridgeless(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], complete4());
  EXPECT_EQ(out[1], triple_edge());
}

TEST(FilterBridgeless, KeepsExactlyTheBridgelessGraphs) {
  const auto all = generate_cubic_graphs(12, false);
  const auto kept = filter_bridgeless(all);
  std::size_t expected = 0;
  for (const auto& g : all) expected += oracle::bridges(g).empty();
  EXPECT_EQ(kept.size(), expected);
  EXPECT_EQ(kept.size(), 81u);
}

TEST(ScanTheorem, UpToEightHasNoPositives) {
  const auto r = scan_theorem(8, false);
  EXPECT_EQ(r.positive_count(), 0);
  EXPECT_TRUE(r.matches_theorem());
  EXPECT_EQ(r.n_range, (std::vector<int>{4, 6, 8}));
}

TEST(ScanTheorem, TenGivesExactlyPetersen) {
  const auto r = scan_theorem(10, false, 2);
  ASSERT_EQ(r.positive_count(), 1);
  const auto& level = r.levels.back();
  ASSERT_EQ(level.premise_positive.size(), 1u);
  EXPECT_TRUE(level.premise_positive[0].is_petersen);
  EXPECT_TRUE(oracle::is_petersen(parse_sparse6(level.premise_positive[0].sparse6)));
  EXPECT_EQ(level.generated, 19);
  EXPECT_EQ(level.bridgeless, 18);
  EXPECT_TRUE(r.matches_theorem());
}

TEST(ScanTheorem, MultigraphsUpToTenGiveExactlyPetersen) {
  const auto r = scan_theorem(10, true, 3);
  EXPECT_EQ(r.n_range, (std::vector<int>{2, 4, 6, 8, 10}));
  EXPECT_EQ(r.positive_count(), 1);
  EXPECT_TRUE(r.matches_theorem());
}

TEST(ScanTheorem, ReportIsIndependentOfWorkerCount) {
  const auto one = to_json(scan_theorem(12, false, 1), false);
  const auto four = to_json(scan_theorem(12, false, 4), false);
  EXPECT_EQ(one.dump(), four.dump());
}

TEST(ScanTheorem, BadBoundsThrow) {
  EXPECT_THROW(scan_theorem(15, false), EnumerationError);
  EXPECT_THROW(scan_theorem(12, true), EnumerationError);
}

TEST(ScanCorpus, DuplicatesAndBridgedGraphsAreHandled) {
  std::mt19937 rng(9);
  const std::vector<CubicGraph> corpus{petersen(), oracle::shuffled(petersen(), rng), bridged_pair(), complete4()};
  const auto r = scan_corpus(corpus, 2, "test");
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.source, "test");
  EXPECT_EQ(r.positive_count(), 1);
  EXPECT_TRUE(r.matches_theorem());
  long long generated = 0, bridgeless = 0;
  for (const auto& level : r.levels) {
    generated += level.generated;
    bridgeless += level.bridgeless;
  }
  EXPECT_EQ(generated, 4);
  EXPECT_EQ(bridgeless, 3);
}

}  // namespace
