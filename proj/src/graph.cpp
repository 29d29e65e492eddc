#include "fivecycles/graph.hpp"

#include <algorithm>

namespace fivecycles {

CubicGraph CubicGraph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n < 2 || n % 2 != 0) {
    throw GraphError(GraphErrorKind::OddOrder,
                     "cubic graph needs an even, positive vertex count; got " + std::to_string(n));
  }
  CubicGraph g;
  g.n_ = n;
  g.edges_.reserve(static_cast<std::size_t>(3 * n / 2));
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> degree(static_cast<std::size_t>(n), 0);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError(GraphErrorKind::VertexRange,
                       "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                           std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError(GraphErrorKind::Loop, "edge " + std::to_string(i) + " is a loop at vertex " +
                                                 std::to_string(u));
    }
    const EdgeId id{static_cast<int>(i)};
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      auto& d = degree[static_cast<std::size_t>(a)];
      if (d == 3) {
        throw GraphError(GraphErrorKind::DegreeViolation,
                         "vertex " + std::to_string(a) + " has degree above 3");
      }
      g.adjacency_[static_cast<std::size_t>(a)][static_cast<std::size_t>(d++)] = {b, id};
    }
    g.edges_.push_back({u, v});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 3) {
      throw GraphError(GraphErrorKind::DegreeViolation,
                       "vertex " + std::to_string(v) + " has degree " +
                           std::to_string(degree[static_cast<std::size_t>(v)]));
    }
  }
  return g;
}

int CubicGraph::multiplicity(Vertex u, Vertex v) const {
  int count = 0;
  for (const auto& inc : incident(u)) count += inc.neighbor == v ? 1 : 0;
  return count;
}

bool CubicGraph::is_simple() const {
  for (Vertex v = 0; v < n_; ++v) {
    const auto& a = adjacency_[static_cast<std::size_t>(v)];
    if (a[0].neighbor == a[1].neighbor || a[0].neighbor == a[2].neighbor ||
        a[1].neighbor == a[2].neighbor) {
      return false;
    }
  }
  return true;
}

CubicGraph CubicGraph::relabeled(std::span<const Vertex> new_label) const {
  std::vector<std::pair<Vertex, Vertex>> moved;
  moved.reserve(edges_.size());
  for (const auto& e : edges_) {
    moved.emplace_back(new_label[static_cast<std::size_t>(e.u)],
                       new_label[static_cast<std::size_t>(e.v)]);
  }
  return from_edge_list(n_, moved);
}

std::vector<std::pair<Vertex, Vertex>> CubicGraph::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool CubicGraph::operator==(const CubicGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) return false;
  }
  return true;
}

CubicGraph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);
  return CubicGraph::from_edge_list(10, pairs);
}

CubicGraph complete4() {
  return CubicGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph triple_edge() { return CubicGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}); }

CubicGraph complete_bipartite33() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
  }
  return CubicGraph::from_edge_list(6, pairs);
}

CubicGraph prism() {
  return CubicGraph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

CubicGraph bridged_pair() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int base : {0, 5}) {
    // K4 on base..base+3 with edge (base, base+1) subdivided by base+4.
    pairs.emplace_back(base, base + 4);
    pairs.emplace_back(base + 4, base + 1);
    pairs.emplace_back(base, base + 2);
    pairs.emplace_back(base, base + 3);
    pairs.emplace_back(base + 1, base + 2);
    pairs.emplace_back(base + 1, base + 3);
    pairs.emplace_back(base + 2, base + 3);
  }
  pairs.emplace_back(4, 9);
  return CubicGraph::from_edge_list(10, pairs);
}

CubicGraph heawood() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < 14; ++i) pairs.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) pairs.emplace_back(i, (i + 5) % 14);
  return CubicGraph::from_edge_list(14, pairs);
}

}  // namespace fivecycles
