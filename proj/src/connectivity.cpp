#include "fivecycles/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace fivecycles {
namespace {

// Component index per vertex, ignoring the edges flagged in `removed`.
std::vector<int> components(const CubicGraph& g, const std::vector<bool>& removed, int& count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (!removed.empty() && removed[inc.edge.value]) continue;
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }
  return comp;
}

void require_connected(const CubicGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

CutSet make_cut(const CubicGraph& g, std::vector<EdgeId> edges, const std::vector<bool>& in_u) {
  CutSet cut;
  std::sort(edges.begin(), edges.end());
  cut.edges = std::move(edges);
  for (Vertex v = 0; v < g.order(); ++v) (in_u[v] ? cut.side_u : cut.side_ubar).push_back(v);
  const bool swap_sides = cut.side_u.size() > cut.side_ubar.size() ||
                          (cut.side_u.size() == cut.side_ubar.size() && !in_u[0]);
  if (swap_sides) std::swap(cut.side_u, cut.side_ubar);
  return cut;
}

// Unit-capacity max flow between s and t, stopping once `cap` is reached.
int max_flow(const CubicGraph& g, Vertex s, Vertex t, int cap) {
  // flow[e] > 0 means one unit travels u -> v along edge e; < 0 means v -> u.
  std::vector<int> flow(static_cast<std::size_t>(g.size()), 0);
  int total = 0;
  while (total < cap) {
    std::vector<std::pair<Vertex, EdgeId>> parent(static_cast<std::size_t>(g.order()), {-1, {}});
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      const Vertex x = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(x)) {
        const auto& e = g.edge(inc.edge);
        const int dir = x == e.u ? 1 : -1;
        if (flow[inc.edge.value] * dir >= 1) continue;  // saturated in this direction
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        parent[inc.neighbor] = {x, inc.edge};
        queue.push(inc.neighbor);
      }
    }
    if (!seen[t]) break;
    for (Vertex x = t; x != s;) {
      const auto [prev, edge] = parent[x];
      flow[edge.value] += prev == g.edge(edge).u ? 1 : -1;
      x = prev;
    }
    ++total;
  }
  return total;
}

}  // namespace

bool CutSet::is_vertex_star(const CubicGraph& g) const {
  if (edges.empty()) return false;
  const auto& first = g.edge(edges.front());
  for (Vertex candidate : {first.u, first.v}) {
    if (std::all_of(edges.begin(), edges.end(),
                    [&](EdgeId e) { return g.edge(e).touches(candidate); })) {
      return true;
    }
  }
  return false;
}

int component_count(const CubicGraph& g) {
  int count = 0;
  components(g, {}, count);
  return count;
}

bool is_connected(const CubicGraph& g) { return component_count(g) == 1; }

std::vector<EdgeId> bridges(const CubicGraph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> found;
  int timer = 0;
  std::function<void(Vertex, EdgeId)> dfs = [&](Vertex x, EdgeId via) {
    disc[x] = low[x] = timer++;
    for (const auto& inc : g.incident(x)) {
      if (inc.edge == via) continue;
      const Vertex y = inc.neighbor;
      if (disc[y] == -1) {
        dfs(y, inc.edge);
        low[x] = std::min(low[x], low[y]);
        if (low[y] > disc[x]) found.push_back(inc.edge);
      } else {
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, EdgeId{});
  }
  std::sort(found.begin(), found.end());
  return found;
}

int edge_connectivity(const CubicGraph& g) {
  require_connected(g);
  int best = 3;
  for (Vertex t = 1; t < g.order() && best > 1; ++t) best = std::min(best, max_flow(g, 0, t, best));
  return best;
}

int girth(const CubicGraph& g) {
  if (find_two_cycle(g)) return 2;
  const int n = g.order();
  int best = n + 1;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<EdgeId> via(static_cast<std::size_t>(n));
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (const auto& inc : g.incident(x)) {
        if (inc.edge == via[x]) continue;
        const Vertex y = inc.neighbor;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          via[y] = inc.edge;
          queue.push(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

std::optional<std::pair<EdgeId, EdgeId>> find_two_cycle(const CubicGraph& g) {
  std::optional<std::pair<EdgeId, EdgeId>> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& inc = g.incident(v);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (inc[i].neighbor != inc[j].neighbor) continue;
        const auto [lo, hi] = std::minmax(inc[i].edge, inc[j].edge);
        const std::pair<EdgeId, EdgeId> candidate{lo, hi};
        if (!best || candidate < *best) best = candidate;
      }
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> cycles_of_length(const CubicGraph& g, int length) {
  if (length < 3 || length > 6) throw std::invalid_argument("cycle length must be in 3..6");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);

  std::function<void(Vertex)> extend = [&](Vertex x) {
    if (static_cast<int>(path.size()) == length) {
      if (g.adjacent(x, path.front()) && path[1] < path.back()) out.push_back(path);
      return;
    }
    Vertex previous = -1;
    std::array<Vertex, 3> next{};
    for (int i = 0; i < 3; ++i) next[i] = g.incident(x)[i].neighbor;
    std::sort(next.begin(), next.end());
    for (Vertex y : next) {
      if (y == previous) continue;  // parallel edges give the same vertex cycle
      previous = y;
      if (y <= path.front() || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      extend(y);
      path.pop_back();
      on_path[y] = false;
    }
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> find_cycle_of_length(const CubicGraph& g, int length) {
  if (length != 3 && length != 4) throw std::invalid_argument("cycle length must be 3 or 4");
  auto cycles = cycles_of_length(g, length);
  if (cycles.empty()) return std::nullopt;
  return cycles.front();
}

std::optional<AdjacentTriangles> find_adjacent_triangles(const CubicGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::array<Vertex, 3> ws{};
    for (int i = 0; i < 3; ++i) ws[i] = g.incident(v)[i].neighbor;
    std::sort(ws.begin(), ws.end());
    for (int i = 0; i < 3; ++i) {
      const Vertex w = ws[i];
      if (w <= v || (i > 0 && ws[i - 1] == w)) continue;
      std::vector<Vertex> common;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v && u != w && g.adjacent(u, v) && g.adjacent(u, w)) common.push_back(u);
      }
      if (common.size() >= 2) {
        EdgeId shared{};
        for (const auto& inc : g.incident(v)) {
          if (inc.neighbor == w && (shared.value < 0 || inc.edge < shared)) shared = inc.edge;
        }
        return AdjacentTriangles{common[0], common[1], v, w, shared};
      }
    }
  }
  return std::nullopt;
}

std::optional<SquareTrianglePair> find_square_triangle_pair(const CubicGraph& g) {
  const auto squares = cycles_of_length(g, 4);
  const auto triangles = cycles_of_length(g, 3);
  auto cycle_edges = [](const std::vector<Vertex>& c) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < c.size(); ++i) edges.push_back(std::minmax(c[i], c[(i + 1) % c.size()]));
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  for (const auto& square : squares) {
    const auto square_edges = cycle_edges(square);
    for (const auto& triangle : triangles) {
      const auto triangle_edges = cycle_edges(triangle);
      std::vector<std::pair<Vertex, Vertex>> common;
      std::set_intersection(square_edges.begin(), square_edges.end(), triangle_edges.begin(),
                            triangle_edges.end(), std::back_inserter(common));
      if (!common.empty()) {
        auto sorted_triangle = triangle;
        std::sort(sorted_triangle.begin(), sorted_triangle.end());
        return SquareTrianglePair{square, sorted_triangle, common.front()};
      }
    }
  }
  return std::nullopt;
}

std::vector<CutSet> enumerate_3_edge_cuts_by_triples(const CubicGraph& g) {
  require_connected(g);
  const int m = g.size();
  std::vector<CutSet> cuts;
  std::vector<bool> removed(static_cast<std::size_t>(m), false);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        const std::array<EdgeId, 3> triple{EdgeId{a}, EdgeId{b}, EdgeId{c}};
        for (auto e : triple) removed[e.value] = true;
        int count = 0;
        const auto comp = components(g, removed, count);
        for (auto e : triple) removed[e.value] = false;
        if (count < 2) continue;

        // Two-colour the components so that every removed edge crosses.
        std::vector<int> colour(static_cast<std::size_t>(count), -1);
        colour[0] = 0;
        bool ok = true;
        for (bool changed = true; changed && ok;) {
          changed = false;
          for (auto e : triple) {
            const int cu = comp[g.edge(e).u];
            const int cv = comp[g.edge(e).v];
            if (cu == cv) {
              ok = false;
              break;
            }
            if (colour[cu] != -1 && colour[cv] == -1) {
              colour[cv] = 1 - colour[cu];
              changed = true;
            } else if (colour[cv] != -1 && colour[cu] == -1) {
              colour[cu] = 1 - colour[cv];
              changed = true;
            } else if (colour[cu] != -1 && colour[cu] == colour[cv]) {
              ok = false;
            }
          }
        }
        if (!ok) continue;
        std::vector<bool> in_u(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) in_u[v] = colour[comp[v]] == 0;
        cuts.push_back(make_cut(g, {triple.begin(), triple.end()}, in_u));
      }
    }
  }
  return cuts;
}

std::vector<CutSet> enumerate_3_edge_cuts_by_growth(const CubicGraph& g) {
  require_connected(g);
  const int n = g.order();
  std::set<std::vector<EdgeId>> seen;
  std::vector<CutSet> cuts;
  std::vector<bool> in_set(static_cast<std::size_t>(n), false);

  auto record = [&]() {
    std::vector<EdgeId> boundary;
    for (int i = 0; i < g.size(); ++i) {
      const auto& e = g.edge(EdgeId{i});
      if (in_set[e.u] != in_set[e.v]) {
        boundary.push_back(EdgeId{i});
        if (boundary.size() > 3) return;
      }
    }
    if (boundary.size() != 3) return;
    if (seen.insert(boundary).second) cuts.push_back(make_cut(g, boundary, in_set));
  };

  // Each connected set is grown from its smallest vertex `root`; a candidate
  // joins the extension only when it is not yet adjacent to the set or the
  // current extension, so every set is produced once.
  std::function<void(Vertex, int, std::vector<Vertex>, std::vector<bool>&)> grow =
      [&](Vertex root, int size, std::vector<Vertex> extension, std::vector<bool>& reached) {
        record();
        if (size == n / 2) return;
        while (!extension.empty()) {
          const Vertex w = extension.back();
          extension.pop_back();
          std::vector<Vertex> next = extension;
          std::vector<Vertex> added;
          for (const auto& inc : g.incident(w)) {
            const Vertex y = inc.neighbor;
            if (y > root && !reached[y]) {
              reached[y] = true;
              added.push_back(y);
              next.push_back(y);
            }
          }
          in_set[w] = true;
          grow(root, size + 1, next, reached);
          in_set[w] = false;
          for (Vertex y : added) reached[y] = false;
        }
      };

  for (Vertex root = 0; root < n; ++root) {
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    reached[root] = true;
    std::vector<Vertex> extension;
    for (const auto& inc : g.incident(root)) {
      if (inc.neighbor > root && !reached[inc.neighbor]) {
        reached[inc.neighbor] = true;
        extension.push_back(inc.neighbor);
      }
    }
    in_set[root] = true;
    grow(root, 1, extension, reached);
    in_set[root] = false;
  }
  std::sort(cuts.begin(), cuts.end(), [](const CutSet& a, const CutSet& b) { return a.edges < b.edges; });
  return cuts;
}

std::vector<CutSet> enumerate_3_edge_cuts(const CubicGraph& g) {
  require_connected(g);
  return edge_connectivity(g) >= 3 ? enumerate_3_edge_cuts_by_growth(g)
                                   : enumerate_3_edge_cuts_by_triples(g);
}

bool has_only_trivial_3_edge_cuts(const CubicGraph& g) {
  const auto cuts = enumerate_3_edge_cuts(g);
  return std::all_of(cuts.begin(), cuts.end(), [&](const CutSet& c) { return c.is_vertex_star(g); });
}

}  // namespace fivecycles
