#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fivecycles/graph.hpp"

namespace fivecycles {

/// The structural facts a connected bridgeless cubic graph whose 2-factors
/// are all made of 5-cycles must satisfy, checked one at a time.
enum class ClaimId {
  NoTwoCycle,              // C1
  NoAdjacentTriangles,     // C2
  NoSquareTrianglePair,    // C3
  NoTriangle,              // C4
  GirthFive,               // C5: no square, girth exactly five
  ThreeEdgeConnected,      // C6
  TrivialThreeCuts,        // C7: every 3-edge cut is a vertex star
  ThreePathMatchings,      // C8: ends of every 3-edge path lie in a common PM
  NeighborhoodStructure,   // FINAL
  UniqueGirthFiveOnTen,    // PROP4
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::NoTwoCycle,         ClaimId::NoAdjacentTriangles,  ClaimId::NoSquareTrianglePair,
    ClaimId::NoTriangle,         ClaimId::GirthFive,            ClaimId::ThreeEdgeConnected,
    ClaimId::TrivialThreeCuts,   ClaimId::ThreePathMatchings,   ClaimId::NeighborhoodStructure,
    ClaimId::UniqueGirthFiveOnTen,
};

/// Short key used in reports: "C1".."C8", "FINAL", "PROP4".
std::string claim_key(ClaimId id);

struct ClaimResult {
  bool holds = false;
  nlohmann::json witness;  // null when there is nothing to show
};

/// Claim evaluation for one graph. All vertices and edge ids refer to the
/// canonical relabeling (see canonical_graph); `labeling` maps input vertices
/// to canonical ones.
struct ClaimReport {
  std::string certificate;  // hex
  std::vector<Vertex> labeling;
  int order = 0;
  /// The theorem only speaks about bridgeless graphs.
  bool bridgeless = true;
  bool premise_holds = false;
  /// A perfect matching whose complementary 2-factor contains a cycle of
  /// length other than five, with that factor's spectrum; null if none.
  nlohmann::json premise_witness;
  std::map<ClaimId, ClaimResult> claims;
  bool is_petersen = false;

  const ClaimResult& at(ClaimId id) const { return claims.at(id); }
  /// For a bridgeless graph, premise_holds implies every claim holds and the
  /// graph is the Petersen graph. Graphs with a bridge are outside the
  /// theorem and always consistent.
  bool consistent_with_theorem() const;
};

/// Evaluates every claim on `g` regardless of whether the premise holds.
/// Throws DisconnectedGraphError.
ClaimReport verify_claims(const CubicGraph& g);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NeighborhoodCheck {
  bool holds = false;
  /// Which sub-check failed ("three_path_in_five_cycle",
  /// "two_path_in_two_five_cycles", "second_neighborhood") and where.
  nlohmann::json witness;
};

/// Requires girth 5 and the 3-path matching property (throws
/// PreconditionError otherwise), then checks: every 3-edge path lies on a
/// 5-cycle; every 2-edge path lies on at least two 5-cycles; around every
/// vertex the ten vertices at distance <= 2 are distinct and each pair of
/// second-neighborhood blocks is joined by exactly two edges.
NeighborhoodCheck verify_neighborhood_structure(const CubicGraph& g);

struct UniquenessResult {
  bool holds = false;
  int total = 0;
  int girth_five = 0;
};

class DuplicateGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Over a list of cubic graphs on ten vertices without repeats up to
/// isomorphism, exactly one has girth five and it is the Petersen graph.
/// Throws DuplicateGraphError when two entries are isomorphic.
UniquenessResult verify_petersen_uniqueness(const std::vector<CubicGraph>& graphs);

}  // namespace fivecycles
