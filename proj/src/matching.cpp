#include "fivecycles/matching.hpp"

#include <algorithm>

namespace fivecycles {
namespace {

class MatchingWalker {
 public:
  MatchingWalker(const CubicGraph& g, const std::function<bool(const PerfectMatching&)>& visit)
      : g_(g), visit_(visit), covered_(static_cast<std::size_t>(g.order()), false) {}

  bool run() { return extend(0); }

 private:
  bool extend(Vertex from) {
    while (from < g_.order() && covered_[from]) ++from;
    if (from == g_.order()) {
      PerfectMatching m{chosen_};
      std::sort(m.edges.begin(), m.edges.end());
      return visit_(m);
    }
    covered_[from] = true;
    for (const auto& inc : g_.incident(from)) {
      if (covered_[inc.neighbor]) continue;
      covered_[inc.neighbor] = true;
      chosen_.push_back(inc.edge);
      const bool keep_going = extend(from + 1);
      chosen_.pop_back();
      covered_[inc.neighbor] = false;
      if (!keep_going) {
        covered_[from] = false;
        return false;
      }
    }
    covered_[from] = false;
    return true;
  }

  const CubicGraph& g_;
  const std::function<bool(const PerfectMatching&)>& visit_;
  std::vector<bool> covered_;
  std::vector<EdgeId> chosen_;
};

bool any_matching(const CubicGraph& g, const std::function<bool(const PerfectMatching&)>& accept) {
  bool found = false;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    found = accept(m);
    return !found;
  });
  return found;
}

void check_edge(const CubicGraph& g, EdgeId e) {
  if (e.value < 0 || e.value >= g.size()) {
    throw MatchingError("edge id " + std::to_string(e.value) + " is out of range");
  }
}

}  // namespace

bool PerfectMatching::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

TutteCount tutte_condition(const CubicGraph& g, std::span<const Vertex> removed) {
  const int n = g.order();
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  int size = 0;
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw MatchingError("vertex " + std::to_string(v) + " is out of range");
    if (!gone[v]) ++size;
    gone[v] = true;
  }
  std::vector<bool> seen = gone;
  std::vector<Vertex> stack;
  int odd = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int component_size = 0;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++component_size;
      for (const auto& inc : g.incident(x)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    odd += component_size % 2;
  }
  return {odd, odd <= size};
}

bool for_each_perfect_matching(const CubicGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit) {
  return MatchingWalker(g, visit).run();
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool exists_perfect_matching(const CubicGraph& g) {
  return any_matching(g, [](const PerfectMatching&) { return true; });
}

TwoFactor complementary_two_factor(const CubicGraph& g, const PerfectMatching& m) {
  const int n = g.order();
  std::vector<int> matched(static_cast<std::size_t>(n), 0);
  std::vector<bool> in_matching(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : m.edges) {
    check_edge(g, e);
    if (in_matching[e.value]) throw MatchingError("edge listed twice in matching");
    in_matching[e.value] = true;
    ++matched[g.edge(e).u];
    ++matched[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (matched[v] != 1) {
      throw MatchingError("not a perfect matching: vertex " + std::to_string(v) + " is covered " +
                          std::to_string(matched[v]) + " times");
    }
  }

  TwoFactor factor;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (Vertex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    FactorCycle cycle;
    Vertex x = start;
    EdgeId came_by{};
    do {
      visited[x] = true;
      cycle.vertices.push_back(x);
      // Leave by the lowest-id unmatched edge other than the one we arrived on.
      EdgeId leave{};
      for (const auto& inc : g.incident(x)) {
        if (in_matching[inc.edge.value] || inc.edge == came_by) continue;
        leave = inc.edge;
        break;
      }
      cycle.edges.push_back(leave);
      x = g.edge(leave).other(x);
      came_by = leave;
    } while (x != start);
    factor.cycles.push_back(std::move(cycle));
  }
  return factor;
}

CycleSpectrum cycle_spectrum(const TwoFactor& f) {
  CycleSpectrum spectrum;
  for (const auto& c : f.cycles) spectrum.lengths.push_back(c.length());
  std::sort(spectrum.lengths.begin(), spectrum.lengths.end());
  return spectrum;
}

std::optional<PerfectMatching> find_non_pentagonal_two_factor(const CubicGraph& g) {
  std::optional<PerfectMatching> witness;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    const auto factor = complementary_two_factor(g, m);
    const bool all_five = std::all_of(factor.cycles.begin(), factor.cycles.end(),
                                      [](const FactorCycle& c) { return c.length() == 5; });
    if (!all_five) witness = m;
    return all_five;
  });
  return witness;
}

bool all_two_factors_are_five_cycles(const CubicGraph& g) {
  return g.order() % 5 == 0 && exists_perfect_matching(g) && !find_non_pentagonal_two_factor(g);
}

bool exists_pm_with_edge(const CubicGraph& g, EdgeId e) {
  check_edge(g, e);
  return any_matching(g, [&](const PerfectMatching& m) { return m.contains(e); });
}

bool exists_pm_avoiding_edge(const CubicGraph& g, EdgeId e) {
  check_edge(g, e);
  return any_matching(g, [&](const PerfectMatching& m) { return !m.contains(e); });
}

std::optional<PerfectMatching> find_pm_with_edge_pair(const CubicGraph& g, EdgeId e, EdgeId f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e == f) throw MatchingError("edge pair must consist of two distinct edges");
  const auto& a = g.edge(e);
  const auto& b = g.edge(f);
  if (a.touches(b.u) || a.touches(b.v)) throw MatchingError("edges of the pair share an endpoint");
  std::optional<PerfectMatching> found;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    if (m.contains(e) && m.contains(f)) found = m;
    return !found;
  });
  return found;
}

bool exists_pm_with_edge_pair(const CubicGraph& g, EdgeId e, EdgeId f) {
  return find_pm_with_edge_pair(g, e, f).has_value();
}

bool exists_two_factor_through_edges(const CubicGraph& g, EdgeId e, EdgeId f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e == f) throw MatchingError("edge pair must consist of two distinct edges");
  return any_matching(g, [&](const PerfectMatching& m) { return !m.contains(e) && !m.contains(f); });
}

bool exists_triangle_free_two_factor(const CubicGraph& g) {
  if (!g.is_simple()) throw MatchingError("triangle-free 2-factor check needs a graph without parallel edges");
  return any_matching(g, [&](const PerfectMatching& m) {
    const auto spectrum = cycle_spectrum(complementary_two_factor(g, m));
    return spectrum.lengths.front() >= 4;
  });
}

}  // namespace fivecycles
