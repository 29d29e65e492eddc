#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fivecycles/graph.hpp"

namespace fivecycles {

/// Raised when an operation that needs a connected graph receives one that
/// is not.
class DisconnectedGraphError : public std::invalid_argument {
 public:
  DisconnectedGraphError() : std::invalid_argument("graph is not connected") {}
};

/// Edge cut delta(U): the edges with exactly one endpoint in `side_u`.
/// `side_u` is the smaller side; on a tie, the side holding vertex 0.
struct CutSet {
  std::vector<EdgeId> edges;  // ascending
  std::vector<Vertex> side_u;
  std::vector<Vertex> side_ubar;

  /// All edges share one endpoint (the three edges at a single vertex).
  bool is_vertex_star(const CubicGraph& g) const;
};

bool is_connected(const CubicGraph& g);
int component_count(const CubicGraph& g);

/// Edges whose removal disconnects their component, ascending by id.
std::vector<EdgeId> bridges(const CubicGraph& g);

/// Size of a minimum edge cut (1..3 for a connected cubic graph), from unit
/// capacity max-flow between vertex 0 and every other vertex.
/// Throws DisconnectedGraphError.
int edge_connectivity(const CubicGraph& g);

/// Length of a shortest cycle; 2 when a parallel pair exists.
int girth(const CubicGraph& g);

/// Lowest-id pair of parallel edges.
std::optional<std::pair<EdgeId, EdgeId>> find_two_cycle(const CubicGraph& g);

/// Triangles {u, v, w} and {u_prime, v, w} sharing the pair (v, w).
struct AdjacentTriangles {
  Vertex u;
  Vertex u_prime;
  Vertex v;
  Vertex w;
  EdgeId shared;  // lowest-id edge joining v and w
};
/// Lexicographically smallest (v, w, u, u') with v < w and u < u'.
std::optional<AdjacentTriangles> find_adjacent_triangles(const CubicGraph& g);

struct SquareTrianglePair {
  std::vector<Vertex> square;    // cyclic order, starting at its smallest vertex
  std::vector<Vertex> triangle;  // ascending
  std::pair<Vertex, Vertex> shared;
};
/// A 4-cycle and a 3-cycle with a common edge; smallest (square, triangle,
/// shared) in lexicographic order.
std::optional<SquareTrianglePair> find_square_triangle_pair(const CubicGraph& g);

/// Lexicographically smallest cycle on `length` distinct vertices, written
/// from its smallest vertex towards the smaller of its two neighbors.
/// `length` must be 3 or 4 (throws std::invalid_argument otherwise).
std::optional<std::vector<Vertex>> find_cycle_of_length(const CubicGraph& g, int length);

/// All vertex cycles of the given length in canonical orientation, sorted.
/// Used by the detectors above and by the verifier; `length` in 3..6.
std::vector<std::vector<Vertex>> cycles_of_length(const CubicGraph& g, int length);

/// Every edge set of size three equal to delta(U) for some proper nonempty U,
/// sorted by edge ids. Uses connected-subset growth on 3-edge-connected
/// graphs and the edge-triple scan otherwise. Throws DisconnectedGraphError.
std::vector<CutSet> enumerate_3_edge_cuts(const CubicGraph& g);
/// Scan over all edge triples.
std::vector<CutSet> enumerate_3_edge_cuts_by_triples(const CubicGraph& g);
/// Connected vertex subsets of size at most n/2 with boundary three. Complete
/// only for 3-edge-connected graphs.
std::vector<CutSet> enumerate_3_edge_cuts_by_growth(const CubicGraph& g);

/// Every 3-edge cut is the star of one vertex (for cubic graphs, the weak
/// form of cyclic 4-edge-connectivity). Throws DisconnectedGraphError.
bool has_only_trivial_3_edge_cuts(const CubicGraph& g);

}  // namespace fivecycles
