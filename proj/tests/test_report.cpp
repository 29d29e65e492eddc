#include <gtest/gtest.h>

#include "fivecycles/report.hpp"

namespace {

using namespace fivecycles;

TEST(Analyze, PetersenProfile) {
  const auto a = analyze(petersen());
  EXPECT_EQ(a.order, 10);
  EXPECT_EQ(a.girth, 5);
  EXPECT_EQ(a.edge_connectivity, 3);
  EXPECT_TRUE(a.bridges.empty());
  EXPECT_EQ(a.matchings.size(), 6u);
  for (const auto& s : a.spectra) EXPECT_EQ(s.lengths, (std::vector<int>{5, 5}));
  EXPECT_TRUE(a.premise_holds);
}

TEST(Analyze, K4Profile) {
  const auto a = analyze(complete4());
  EXPECT_EQ(a.matchings.size(), 3u);
  for (const auto& s : a.spectra) EXPECT_EQ(s.lengths, std::vector<int>{4});
  EXPECT_FALSE(a.premise_holds);
}

TEST(Json, AnalysisCarriesKindAndFacts) {
  const auto j = to_json(analyze(petersen()));
  EXPECT_EQ(j["kind"], "analysis");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["perfect_matching_count"], 6);
  EXPECT_EQ(j["two_factors"].size(), 6u);
  EXPECT_EQ(j["premise_holds"], true);
}

TEST(Json, ClaimsAreKeyedByClaimName) {
  const auto j = to_json(verify_claims(petersen()));
  EXPECT_EQ(j["kind"], "claims");
  for (ClaimId id : kAllClaims) EXPECT_EQ(j["claims"][claim_key(id)]["holds"], true) << claim_key(id);
  EXPECT_EQ(j["is_petersen"], true);
}

TEST(Json, ScanWithoutTimingIsDeterministic) {
  const auto a = to_json(scan_theorem(10, false, 1), false);
  const auto b = to_json(scan_theorem(10, false, 3), false);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_FALSE(a["levels"][0].contains("elapsed_seconds"));
  EXPECT_TRUE(to_json(scan_theorem(4, false))["levels"][0].contains("elapsed_seconds"));
}

TEST(Text, CarriesTheSameFactsAsJson) {
  const auto a = analyze(petersen());
  const auto text = to_text(a);
  EXPECT_NE(text.find("perfect_matching_count: 6"), std::string::npos);
  EXPECT_NE(text.find("girth: 5"), std::string::npos);
  EXPECT_NE(text.find("spectrum {5,5}"), std::string::npos);
  EXPECT_NE(text.find("premise_holds: true"), std::string::npos);

  const auto claims = to_text(verify_claims(prism()));
  EXPECT_NE(claims.find("C7: fails"), std::string::npos);
  EXPECT_NE(claims.find("consistent_with_theorem: true"), std::string::npos);

  const auto scan = to_text(scan_theorem(10, false));
  EXPECT_NE(scan.find("[Petersen]"), std::string::npos);
  EXPECT_NE(scan.find("matches_theorem: true"), std::string::npos);
}

}  // namespace
