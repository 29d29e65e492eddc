#include "fivecycles/verifier.hpp"

#include <algorithm>
#include <set>

#include "fivecycles/canonical.hpp"
#include "fivecycles/connectivity.hpp"
#include "fivecycles/matching.hpp"

namespace fivecycles {
namespace {

using nlohmann::json;

json ids(const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(e.value);
  return out;
}

json matching_witness(const CubicGraph& g, const PerfectMatching& m) {
  return {{"matching", ids(m.edges)},
          {"spectrum", cycle_spectrum(complementary_two_factor(g, m)).lengths}};
}

struct ThreePath {
  Vertex u, v, w, x;
  EdgeId first, middle, last;
};

// Paths u-v-w-x on four distinct vertices, each listed once (the middle edge
// is walked from its stored u endpoint to its v endpoint).
std::vector<ThreePath> three_paths(const CubicGraph& g) {
  std::vector<ThreePath> out;
  for (int id = 0; id < g.size(); ++id) {
    const EdgeId middle{id};
    const Vertex v = g.edge(middle).u;
    const Vertex w = g.edge(middle).v;
    for (const auto& a : g.incident(v)) {
      if (a.edge == middle || a.neighbor == w) continue;
      for (const auto& b : g.incident(w)) {
        if (b.edge == middle || b.neighbor == v || b.neighbor == a.neighbor) continue;
        out.push_back({a.neighbor, v, w, b.neighbor, a.edge, middle, b.edge});
      }
    }
  }
  return out;
}

json path_json(const ThreePath& p) {
  return {{"vertices", {p.u, p.v, p.w, p.x}}, {"edges", {p.first.value, p.middle.value, p.last.value}}};
}

// First 3-edge path whose end edges lie in no common perfect matching.
std::optional<ThreePath> find_unmatched_three_path(const CubicGraph& g) {
  const auto m = static_cast<std::size_t>(g.size());
  std::vector<std::vector<bool>> together(m, std::vector<bool>(m, false));
  for_each_perfect_matching(g, [&](const PerfectMatching& pm) {
    for (EdgeId a : pm.edges) {
      for (EdgeId b : pm.edges) together[a.value][b.value] = true;
    }
    return true;
  });
  for (const auto& p : three_paths(g)) {
    if (!together[p.first.value][p.last.value]) return p;
  }
  return std::nullopt;
}

std::vector<Vertex> others(const CubicGraph& g, Vertex of, Vertex except) {
  std::vector<Vertex> out;
  for (const auto& inc : g.incident(of)) {
    if (inc.neighbor != except) out.push_back(inc.neighbor);
  }
  return out;
}

int edges_between(const CubicGraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  int count = 0;
  for (Vertex x : a) {
    for (Vertex y : b) count += g.multiplicity(x, y);
  }
  return count;
}

ClaimResult no_two_cycle(const CubicGraph& g) {
  const auto pair = find_two_cycle(g);
  if (!pair) return {true, nullptr};
  const auto& e = g.edge(pair->first);
  json witness = {{"edges", {pair->first.value, pair->second.value}}, {"vertices", {e.u, e.v}}};
  // A perfect matching missing both parallel edges leaves them as a 2-cycle.
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    if (m.contains(pair->first) || m.contains(pair->second)) return true;
    witness["two_factor"] = matching_witness(g, m);
    return false;
  });
  return {false, witness};
}

ClaimResult no_adjacent_triangles(const CubicGraph& g) {
  const auto t = find_adjacent_triangles(g);
  if (!t) return {true, nullptr};
  return {false, {{"u", t->u}, {"u_prime", t->u_prime}, {"shared", {t->v, t->w}}, {"shared_edge", t->shared.value}}};
}

ClaimResult no_square_triangle_pair(const CubicGraph& g) {
  const auto p = find_square_triangle_pair(g);
  if (!p) return {true, nullptr};
  return {false, {{"square", p->square}, {"triangle", p->triangle}, {"shared", {p->shared.first, p->shared.second}}}};
}

ClaimResult no_triangle(const CubicGraph& g) {
  const auto c = find_cycle_of_length(g, 3);
  if (!c) return {true, nullptr};
  return {false, {{"triangle", *c}}};
}

ClaimResult girth_five(const CubicGraph& g, int girth_value) {
  if (girth_value == 5) return {true, nullptr};
  json witness = {{"girth", girth_value}};
  if (const auto square = find_cycle_of_length(g, 4)) witness["square"] = *square;
  return {false, witness};
}

ClaimResult three_edge_connected(const CubicGraph& g) {
  const int k = edge_connectivity(g);
  if (k >= 3) return {true, nullptr};
  json witness = {{"edge_connectivity", k}};
  if (k == 1) {
    witness["cut"] = json::array({bridges(g).front().value});
    return {false, witness};
  }
  // Smallest pair of edges whose removal disconnects the graph.
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b) {
      // Reachability from vertex 0 over the kept edges.
      std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
      std::vector<Vertex> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(x)) {
          if (inc.edge.value == a || inc.edge.value == b || seen[inc.neighbor]) continue;
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        witness["cut"] = {a, b};
        return {false, witness};
      }
    }
  }
  return {false, witness};
}

ClaimResult trivial_three_cuts(const CubicGraph& g) {
  for (const auto& cut : enumerate_3_edge_cuts(g)) {
    if (!cut.is_vertex_star(g)) return {false, {{"cut", ids(cut.edges)}, {"side", cut.side_u}}};
  }
  return {true, nullptr};
}

ClaimResult three_path_matchings(const CubicGraph& g) {
  const auto path = find_unmatched_three_path(g);
  if (!path) return {true, nullptr};
  return {false, {{"path", path_json(*path)}}};
}

ClaimResult neighborhood_structure(const CubicGraph& g) {
  try {
    const auto check = verify_neighborhood_structure(g);
    return {check.holds, check.witness};
  } catch (const PreconditionError& e) {
    return {false, {{"precondition", e.what()}}};
  }
}

const std::string& petersen_certificate() {
  static const std::string certificate = canonical_form(petersen()).certificate;
  return certificate;
}

}  // namespace

std::string claim_key(ClaimId id) {
  switch (id) {
    case ClaimId::NoTwoCycle: return "C1";
    case ClaimId::NoAdjacentTriangles: return "C2";
    case ClaimId::NoSquareTrianglePair: return "C3";
    case ClaimId::NoTriangle: return "C4";
    case ClaimId::GirthFive: return "C5";
    case ClaimId::ThreeEdgeConnected: return "C6";
    case ClaimId::TrivialThreeCuts: return "C7";
    case ClaimId::ThreePathMatchings: return "C8";
    case ClaimId::NeighborhoodStructure: return "FINAL";
    case ClaimId::UniqueGirthFiveOnTen: return "PROP4";
  }
  return "?";
}

bool ClaimReport::consistent_with_theorem() const {
  if (!bridgeless || !premise_holds) return true;
  return is_petersen && std::all_of(claims.begin(), claims.end(), [](const auto& kv) { return kv.second.holds; });
}

ClaimReport verify_claims(const CubicGraph& input) {
  if (!is_connected(input)) throw DisconnectedGraphError();
  const auto form = canonical_form(input);
  const auto g = canonical_graph(input);

  ClaimReport report;
  report.certificate = certificate_hex(form.certificate);
  report.labeling = form.labeling;
  report.order = g.order();
  report.is_petersen = form.certificate == petersen_certificate();

  report.bridgeless = bridges(g).empty();
  report.premise_holds = all_two_factors_are_five_cycles(g);
  if (const auto m = find_non_pentagonal_two_factor(g)) report.premise_witness = matching_witness(g, *m);

  const int girth_value = girth(g);
  report.claims[ClaimId::NoTwoCycle] = no_two_cycle(g);
  report.claims[ClaimId::NoAdjacentTriangles] = no_adjacent_triangles(g);
  report.claims[ClaimId::NoSquareTrianglePair] = no_square_triangle_pair(g);
  report.claims[ClaimId::NoTriangle] = no_triangle(g);
  report.claims[ClaimId::GirthFive] = girth_five(g, girth_value);
  report.claims[ClaimId::ThreeEdgeConnected] = three_edge_connected(g);
  report.claims[ClaimId::TrivialThreeCuts] = trivial_three_cuts(g);
  report.claims[ClaimId::ThreePathMatchings] = three_path_matchings(g);
  report.claims[ClaimId::NeighborhoodStructure] = neighborhood_structure(g);

  const bool candidate = g.order() == 10 && g.is_simple() && girth_value == 5;
  report.claims[ClaimId::UniqueGirthFiveOnTen] = {
      !candidate || report.is_petersen,
      candidate ? json{{"girth", girth_value}, {"order", g.order()}} : json(nullptr)};
  return report;
}

NeighborhoodCheck verify_neighborhood_structure(const CubicGraph& g) {
  const int girth_value = girth(g);
  if (girth_value != 5) {
    throw PreconditionError("girth is " + std::to_string(girth_value) + ", not 5");
  }
  if (const auto p = find_unmatched_three_path(g)) {
    throw PreconditionError("3-edge path " + std::to_string(p->u) + "-" + std::to_string(p->v) + "-" +
                            std::to_string(p->w) + "-" + std::to_string(p->x) +
                            " has no perfect matching through both end edges");
  }

  // Every 3-edge path closes into a 5-cycle through one more vertex.
  for (const auto& p : three_paths(g)) {
    bool closes = false;
    for (const auto& inc : g.incident(p.u)) {
      const Vertex y = inc.neighbor;
      if (y != p.v && y != p.w && y != p.x && g.adjacent(y, p.x)) closes = true;
    }
    if (!closes) return {false, {{"check", "three_path_in_five_cycle"}, {"path", path_json(p)}}};
  }

  // Every 2-edge path a-u-b lies on at least two 5-cycles a-u-b-c-d.
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& inc = g.incident(u);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Vertex a = inc[i].neighbor;
        const Vertex b = inc[j].neighbor;
        int cycles = 0;
        for (Vertex c : others(g, b, u)) {
          for (Vertex d : others(g, a, u)) {
            if (c != d && c != a && d != b && g.adjacent(c, d)) ++cycles;
          }
        }
        if (cycles < 2) {
          return {false, {{"check", "two_path_in_two_five_cycles"}, {"path", {a, u, b}}, {"five_cycles", cycles}}};
        }
      }
    }
  }

  // Around u with neighbors v, w, x: blocks N(v)-u, N(w)-u, N(x)-u are
  // disjoint pairs joined pairwise by exactly two edges.
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<std::vector<Vertex>> blocks;
    std::set<Vertex> named{u};
    for (const auto& inc : g.incident(u)) {
      named.insert(inc.neighbor);
      blocks.push_back(others(g, inc.neighbor, u));
      named.insert(blocks.back().begin(), blocks.back().end());
    }
    json counts = json::array();
    bool ok = named.size() == 10;
    for (int i = 0; i < 3; ++i) {
      const int between = edges_between(g, blocks[i], blocks[(i + 1) % 3]);
      counts.push_back(between);
      ok = ok && between == 2;
    }
    if (!ok) {
      return {false, {{"check", "second_neighborhood"}, {"vertex", u}, {"distinct", named.size()}, {"block_edges", counts}}};
    }
  }
  return {true, nullptr};
}

UniquenessResult verify_petersen_uniqueness(const std::vector<CubicGraph>& graphs) {
  UniquenessResult result;
  std::set<std::string> seen;
  bool petersen_found = false;
  for (const auto& g : graphs) {
    const auto certificate = canonical_form(g).certificate;
    if (!seen.insert(certificate).second) {
      throw DuplicateGraphError("graph #" + std::to_string(result.total) + " repeats an earlier graph");
    }
    ++result.total;
    if (g.order() == 10 && g.is_simple() && girth(g) == 5) {
      ++result.girth_five;
      petersen_found = petersen_found || certificate == petersen_certificate();
    }
  }
  result.holds = result.girth_five == 1 && petersen_found;
  return result;
}

}  // namespace fivecycles
