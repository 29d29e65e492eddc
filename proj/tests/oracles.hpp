#pragma once

// Brute-force reference implementations used only by the tests. Each one
// works from the raw edge list and shares no code with the library's
// algorithms, so agreement between the two is meaningful.

#include <random>
#include <set>
#include <vector>

#include "fivecycles/graph.hpp"

namespace oracle {

using fivecycles::CubicGraph;
using fivecycles::Vertex;

using EdgeSet = std::vector<int>;  // ascending edge ids

/// Backtracking bijection search comparing edge multiplicities directly.
bool isomorphic(const CubicGraph& g, const CubicGraph& h);

bool is_petersen(const CubicGraph& g);

/// Same labeled multigraph, ignoring edge order and endpoint order.
bool same_edges(const CubicGraph& g, const CubicGraph& h);

/// One representative per isomorphism class of connected cubic graphs
/// (loopless multigraphs when `multi`) on n vertices, by exhaustive labeled
/// enumeration followed by pairwise isomorphism tests.
std::vector<CubicGraph> cubic_classes(int n, bool multi);

/// Edge sets of size n/2 covering every vertex exactly once.
std::set<EdgeSet> perfect_matchings(const CubicGraph& g);

/// Component count after deleting the edges in `removed` (union-find).
int components_without(const CubicGraph& g, const std::set<int>& removed);
bool connected(const CubicGraph& g);

std::vector<int> bridges(const CubicGraph& g);

/// Smallest k <= 3 such that deleting some k edges disconnects g.
int edge_connectivity(const CubicGraph& g);

/// Length of the shortest cycle, counting a parallel pair as a 2-cycle.
int girth(const CubicGraph& g);

/// Distinct sets delta(U) of size three, U proper and nonempty.
std::set<EdgeSet> three_edge_cuts(const CubicGraph& g);

/// Tutte's condition checked over every vertex subset.
bool tutte_holds_everywhere(const CubicGraph& g);

/// Lengths of the cycles of the 2-factor left after removing `matching`.
std::vector<int> complement_spectrum(const CubicGraph& g, const EdgeSet& matching);

/// Simple cycles of the given length, each as a vertex set.
std::set<std::vector<Vertex>> cycle_vertex_sets(const CubicGraph& g, int length);

/// Uniformly random relabeling of g.
CubicGraph shuffled(const CubicGraph& g, std::mt19937& rng);

}  // namespace oracle
