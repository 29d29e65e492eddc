#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fivecycles {

using Vertex = int;

/// Stable identity of one edge of a multigraph. Parallel edges get distinct ids.
struct EdgeId {
  int value = -1;

  constexpr auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  Vertex u;
  Vertex v;

  /// Endpoint opposite to `x`; `x` must be an endpoint.
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  constexpr bool touches(Vertex x) const { return x == u || x == v; }
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

enum class GraphErrorKind {
  OddOrder,
  VertexRange,
  Loop,
  DegreeViolation,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Loopless cubic multigraph with a fixed vertex count.
///
/// Immutable after construction. Edge ids follow the order of the pairs passed
/// to the constructor; each vertex's incidence list is ordered by edge id.
class CubicGraph {
 public:
  /// Validates and builds a graph from `pairs.size() == 3n/2` endpoint pairs.
  /// Throws GraphError with a kind naming the first violated invariant; a
  /// wrong number of pairs shows up as a degree violation.
  static CubicGraph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static CubicGraph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e.value)); }
  const std::array<Incidence, 3>& incident(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }

  /// Number of parallel edges joining `u` and `v`.
  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  /// True when no two edges share both endpoints.
  bool is_simple() const;

  /// Copy where old vertex `v` becomes `new_label[v]`; edge ids are preserved.
  CubicGraph relabeled(std::span<const Vertex> new_label) const;

  /// Endpoint pairs in edge-id order.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  /// Same vertex count and same edge list (as id-ordered endpoint pairs, each
  /// pair unordered).
  bool operator==(const CubicGraph& other) const;

 private:
  CubicGraph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<Incidence, 3>> adjacency_;
};

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
CubicGraph petersen();
/// Complete graph on four vertices.
CubicGraph complete4();
/// Two vertices joined by three parallel edges.
CubicGraph triple_edge();
CubicGraph complete_bipartite33();
/// Triangular prism K3 x K2: triangles 0,1,2 and 3,4,5 with rungs i -- i+3.
CubicGraph prism();
/// Two copies of K4 with one edge subdivided, the subdivision vertices joined
/// by a bridge (10 vertices, the smallest simple cubic graph with a bridge).
CubicGraph bridged_pair();
/// Incidence graph of the Fano plane (14 vertices, girth 6).
CubicGraph heawood();

}  // namespace fivecycles
