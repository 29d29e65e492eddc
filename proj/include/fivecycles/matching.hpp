#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fivecycles/graph.hpp"

namespace fivecycles {

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PerfectMatching {
  std::vector<EdgeId> edges;  // ascending

  bool contains(EdgeId e) const;
};

/// One cycle of a 2-factor: `vertices[i]` and `vertices[i+1]` (cyclically)
/// are joined by `edges[i]`. A 2-cycle is a pair of parallel edges.
struct FactorCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct TwoFactor {
  std::vector<FactorCycle> cycles;
};

struct CycleSpectrum {
  std::vector<int> lengths;  // ascending

  bool operator==(const CycleSpectrum&) const = default;
};

struct TutteCount {
  int odd_components = 0;
  bool satisfied = false;
};

/// Odd components of g - S, and whether their number is at most |S|.
/// `removed` lists the vertices of S (duplicates ignored).
TutteCount tutte_condition(const CubicGraph& g, std::span<const Vertex> removed);

/// Visits perfect matchings in a fixed depth-first order (lowest uncovered
/// vertex first, its incident edges by id) until `visit` returns false.
/// Returns false iff the visit was stopped early.
bool for_each_perfect_matching(const CubicGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit);

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g);
bool exists_perfect_matching(const CubicGraph& g);

/// The edges outside `m`, split into cycles. Throws MatchingError unless `m`
/// covers every vertex exactly once.
TwoFactor complementary_two_factor(const CubicGraph& g, const PerfectMatching& m);
CycleSpectrum cycle_spectrum(const TwoFactor& f);

/// True iff g has a perfect matching and every complementary 2-factor
/// consists only of 5-cycles.
bool all_two_factors_are_five_cycles(const CubicGraph& g);

/// First perfect matching (in visiting order) whose complementary 2-factor
/// has a cycle of length other than five, if any.
std::optional<PerfectMatching> find_non_pentagonal_two_factor(const CubicGraph& g);

bool exists_pm_with_edge(const CubicGraph& g, EdgeId e);
bool exists_pm_avoiding_edge(const CubicGraph& g, EdgeId e);

/// Some perfect matching contains both edges. Throws MatchingError when the
/// edges are equal or share an endpoint.
bool exists_pm_with_edge_pair(const CubicGraph& g, EdgeId e, EdgeId f);
std::optional<PerfectMatching> find_pm_with_edge_pair(const CubicGraph& g, EdgeId e, EdgeId f);

/// Some 2-factor contains both edges, i.e. some perfect matching avoids both.
/// Throws MatchingError when e == f.
bool exists_two_factor_through_edges(const CubicGraph& g, EdgeId e, EdgeId f);

/// Some complementary 2-factor has no triangle. Throws MatchingError on a
/// multigraph.
bool exists_triangle_free_two_factor(const CubicGraph& g);

}  // namespace fivecycles
