#include <gtest/gtest.h>

#include <random>

#include "fivecycles/canonical.hpp"
#include "fivecycles/connectivity.hpp"
#include "fivecycles/enumeration.hpp"
#include "fivecycles/verifier.hpp"
#include "oracles.hpp"

namespace {

using namespace fivecycles;

bool holds(const ClaimReport& r, ClaimId id) { return r.claims.at(id).holds; }

TEST(VerifyClaims, PetersenSatisfiesEveryClaim) {
  const auto r = verify_claims(petersen());
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.is_petersen);
  EXPECT_EQ(r.claims.size(), std::size(kAllClaims));
  for (ClaimId id : kAllClaims) EXPECT_TRUE(holds(r, id)) << claim_key(id);
  EXPECT_TRUE(r.consistent_with_theorem());
  EXPECT_TRUE(r.premise_witness.is_null());
}

TEST(VerifyClaims, K4FailsTriangleAndGirthClaimsVacuously) {
  const auto r = verify_claims(complete4());
  EXPECT_FALSE(r.premise_holds);
  EXPECT_FALSE(holds(r, ClaimId::NoTriangle));
  EXPECT_EQ(r.claims.at(ClaimId::NoTriangle).witness["triangle"].size(), 3u);
  EXPECT_FALSE(holds(r, ClaimId::GirthFive));
  EXPECT_FALSE(r.is_petersen);
  EXPECT_TRUE(r.consistent_with_theorem());
  EXPECT_EQ(r.premise_witness["spectrum"], nlohmann::json::array({4}));
}

TEST(VerifyClaims, PrismHasANonStarThreeCut) {
  const auto r = verify_claims(prism());
  EXPECT_FALSE(r.premise_holds);
  ASSERT_FALSE(holds(r, ClaimId::TrivialThreeCuts));
  const auto& w = r.claims.at(ClaimId::TrivialThreeCuts).witness;
  EXPECT_EQ(w["cut"].size(), 3u);
  EXPECT_EQ(w["side"].size(), 3u);
}

TEST(VerifyClaims, BridgedGraphReportsTheBridge) {
  const auto r = verify_claims(bridged_pair());
  ASSERT_FALSE(holds(r, ClaimId::ThreeEdgeConnected));
  const auto& w = r.claims.at(ClaimId::ThreeEdgeConnected).witness;
  EXPECT_EQ(w["edge_connectivity"], 1);
  // The witness refers to the canonical relabeling; it must be a bridge there.
  const auto c = canonical_graph(bridged_pair());
  EXPECT_EQ(oracle::bridges(c), std::vector<int>{w["cut"][0].get<int>()});
}

TEST(VerifyClaims, TripleEdgeHasATwoCycleWitness) {
  const auto r = verify_claims(triple_edge());
  EXPECT_FALSE(r.premise_holds);
  ASSERT_FALSE(holds(r, ClaimId::NoTwoCycle));
  EXPECT_EQ(r.claims.at(ClaimId::NoTwoCycle).witness["two_factor"]["spectrum"], nlohmann::json::array({2}));
}

TEST(VerifyClaims, BridgedGraphSatisfiesThePremiseOutsideTheTheorem) {
  // Each side of the bridge is a 5-cycle in every 2-factor.
  const auto r = verify_claims(bridged_pair());
  EXPECT_FALSE(r.bridgeless);
  EXPECT_TRUE(r.premise_holds);
  EXPECT_FALSE(r.is_petersen);
  EXPECT_TRUE(r.consistent_with_theorem());
  for (const auto& m : oracle::perfect_matchings(bridged_pair())) {
    EXPECT_EQ(oracle::complement_spectrum(bridged_pair(), m), (std::vector<int>{5, 5}));
  }
}

TEST(VerifyClaims, DisconnectedInputIsRejected) {
  const auto g = CubicGraph::from_edge_list(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
  EXPECT_THROW(verify_claims(g), DisconnectedGraphError);
}

TEST(VerifyClaims, ReportDependsOnlyOnTheIsomorphismClass) {
  std::mt19937 rng(17);
  for (const auto& g : {petersen(), prism(), bridged_pair(), heawood(), triple_edge()}) {
    const auto a = verify_claims(g);
    const auto b = verify_claims(oracle::shuffled(g, rng));
    EXPECT_EQ(a.certificate, b.certificate);
    for (ClaimId id : kAllClaims) {
      EXPECT_EQ(a.claims.at(id).holds, b.claims.at(id).holds);
      EXPECT_EQ(a.claims.at(id).witness, b.claims.at(id).witness);
    }
  }
}

TEST(VerifyClaims, ClaimPredicatesMatchBruteForceEverywhere) {
  for (bool multi : {false, true}) {
    for (int n = 2; n <= (multi ? 8 : 10); n += 2) {
      for (const auto& g : oracle::cubic_classes(n, multi)) {
        if (!multi && n == 2) continue;
        const auto r = verify_claims(g);
        const auto c = canonical_graph(g);
        const int gi = oracle::girth(g);
        EXPECT_EQ(holds(r, ClaimId::NoTwoCycle), gi > 2);
        EXPECT_EQ(holds(r, ClaimId::NoTriangle), oracle::cycle_vertex_sets(g, 3).empty());
        EXPECT_EQ(holds(r, ClaimId::GirthFive), gi == 5);
        EXPECT_EQ(holds(r, ClaimId::ThreeEdgeConnected), oracle::edge_connectivity(g) == 3);
        bool trivial = true;
        for (const auto& cut : oracle::three_edge_cuts(c)) {
          const auto& a = c.edge(EdgeId{cut[0]});
          bool star = false;
          for (Vertex v : {a.u, a.v}) {
            star = star || (c.edge(EdgeId{cut[1]}).touches(v) && c.edge(EdgeId{cut[2]}).touches(v));
          }
          trivial = trivial && star;
        }
        EXPECT_EQ(holds(r, ClaimId::TrivialThreeCuts), trivial);
        EXPECT_EQ(r.is_petersen, oracle::is_petersen(g));
        EXPECT_EQ(r.bridgeless, oracle::bridges(g).empty());
        EXPECT_TRUE(r.consistent_with_theorem());
        if (r.bridgeless && r.premise_holds) EXPECT_TRUE(r.is_petersen);
        if (!r.premise_holds && !oracle::perfect_matchings(g).empty()) {
          // The witness matching leaves a cycle that is not a 5-cycle.
          const auto& w = r.premise_witness;
          ASSERT_FALSE(w.is_null());
          oracle::EdgeSet m = w["matching"].get<oracle::EdgeSet>();
          ASSERT_TRUE(oracle::perfect_matchings(c).count(m));
          const auto lengths = oracle::complement_spectrum(c, m);
          EXPECT_TRUE(std::any_of(lengths.begin(), lengths.end(), [](int l) { return l != 5; }));
        }
      }
    }
  }
}

TEST(NeighborhoodStructure, HoldsOnPetersen) {
  const auto check = verify_neighborhood_structure(petersen());
  EXPECT_TRUE(check.holds);
}

TEST(NeighborhoodStructure, PreconditionsAreEnforced) {
  EXPECT_THROW(verify_neighborhood_structure(complete_bipartite33()), PreconditionError);
  EXPECT_THROW(verify_neighborhood_structure(heawood()), PreconditionError);
  const auto r = verify_claims(heawood());
  EXPECT_FALSE(holds(r, ClaimId::NeighborhoodStructure));
  EXPECT_TRUE(r.claims.at(ClaimId::NeighborhoodStructure).witness.contains("precondition"));
}

TEST(NeighborhoodStructure, EveryTwoPathOfPetersenLiesOnTwoFiveCycles) {
  const auto g = petersen();
  const auto pentagons = oracle::cycle_vertex_sets(g, 5);
  EXPECT_EQ(pentagons.size(), 12u);
  for (Vertex u = 0; u < 10; ++u) {
    for (const auto& a : g.incident(u)) {
      for (const auto& b : g.incident(u)) {
        if (a.neighbor >= b.neighbor) continue;
        int count = 0;
        for (const auto& p : pentagons) {
          // The 5-cycle on this vertex set uses both edges at u.
          if (std::binary_search(p.begin(), p.end(), u) && std::binary_search(p.begin(), p.end(), a.neighbor) &&
              std::binary_search(p.begin(), p.end(), b.neighbor)) {
            ++count;
          }
        }
        EXPECT_GE(count, 2);
      }
    }
  }
}

TEST(PetersenUniqueness, FullTenVertexStream) {
  const auto graphs = generate_cubic_graphs(10, false);
  const auto r = verify_petersen_uniqueness(graphs);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.total, 19);
  EXPECT_EQ(r.girth_five, 1);
}

TEST(PetersenUniqueness, FailsWithoutPetersen) {
  auto graphs = generate_cubic_graphs(10, false);
  std::erase_if(graphs, [](const CubicGraph& g) { return oracle::is_petersen(g); });
  const auto r = verify_petersen_uniqueness(graphs);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.total, 18);
  EXPECT_EQ(r.girth_five, 0);
}

TEST(PetersenUniqueness, DuplicatesAreRejected) {
  std::mt19937 rng(4);
  auto graphs = generate_cubic_graphs(10, false);
  graphs.push_back(oracle::shuffled(graphs.front(), rng));
  EXPECT_THROW(verify_petersen_uniqueness(graphs), DuplicateGraphError);
}

}  // namespace
