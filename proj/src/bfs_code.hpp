#pragma once

// Breadth-first codes of (partial) cubic multigraphs.
//
// A BFS labeling numbers a root 0, then processes vertices in label order,
// giving the not-yet-labeled neighbors of the current vertex the next free
// labels in some order (restarting from a fresh root when a component is
// exhausted). The code of a labeling is the concatenation over labels
// 0..n-1 of the sorted neighbor labels of that vertex. The canonical code of
// a graph is the lexicographically smallest code over all BFS labelings.
//
// The orderly generator builds graphs in exactly this labeled form, so a
// generated graph is kept iff its own code is the canonical one.

#include <array>
#include <span>
#include <vector>

namespace fivecycles::detail {

inline constexpr int kOpen = -1;

/// Cubic multigraph under construction: slots beyond `degree[v]` are open.
struct PartialCubic {
  int n = 0;
  std::vector<std::array<int, 3>> nbr;
  std::vector<int> degree;

  explicit PartialCubic(int order)
      : n(order), nbr(static_cast<std::size_t>(order), {kOpen, kOpen, kOpen}),
        degree(static_cast<std::size_t>(order), 0) {}

  bool complete(int v) const { return degree[v] == 3; }
  void add_edge(int u, int v) {
    nbr[u][degree[u]++] = v;
    nbr[v][degree[v]++] = u;
  }
  void remove_last_edge(int u, int v) {
    nbr[u][--degree[u]] = kOpen;
    nbr[v][--degree[v]] = kOpen;
  }
};

struct MinimalCode {
  std::vector<int> code;   // 3n entries
  std::vector<int> label;  // vertex -> canonical label
};

/// Canonical code and one labeling that attains it. `g` must be complete.
MinimalCode minimal_code(const PartialCubic& g);

/// True if some BFS labeling of `g` has a code strictly smaller than
/// `reference` within the first `reference_rows` rows, judged only on rows
/// whose vertices are complete in `g`. A true answer is final for every
/// completion of `g`.
bool exists_smaller_code(const PartialCubic& g, std::span<const int> reference,
                         int reference_rows);

/// Code of the identity labeling for rows 0..rows-1 (vertices must be complete).
std::vector<int> identity_code(const PartialCubic& g, int rows);

}  // namespace fivecycles::detail
