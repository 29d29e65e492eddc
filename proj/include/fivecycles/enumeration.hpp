#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fivecycles/graph.hpp"

namespace fivecycles {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorLimits {
  int max_simple = 14;
  int max_multi = 10;
};

/// Throws EnumerationError unless `n` is even, at least 2, and within the
/// limit for the requested graph class.
void check_order(int n, bool allow_multi, const GeneratorLimits& limits = {});

/// Orderly generation: calls `sink` once per isomorphism class of connected
/// cubic graphs on `n` vertices (loopless multigraphs when `allow_multi`).
/// Each emitted graph is in canonical form (see canonical_graph), emitted in
/// increasing order of its breadth-first code.
void generate_cubic_graphs(int n, bool allow_multi,
                           const std::function<void(const CubicGraph&)>& sink,
                           const GeneratorLimits& limits = {});
std::vector<CubicGraph> generate_cubic_graphs(int n, bool allow_multi,
                                              const GeneratorLimits& limits = {});

std::vector<CubicGraph> filter_bridgeless(std::span<const CubicGraph> graphs);

struct PositiveInstance {
  std::string certificate;  // hex
  std::string sparse6;
  bool is_petersen = false;
};

struct ScanLevel {
  int n = 0;
  long long generated = 0;
  long long bridgeless = 0;
  std::vector<PositiveInstance> premise_positive;  // sorted by certificate
  double elapsed_seconds = 0.0;
};

struct ScanReport {
  bool allow_multi = false;
  /// True when the levels come from the generator and so cover every graph.
  bool exhaustive = true;
  std::string source;  // "generator" or the corpus name
  std::vector<int> n_range;
  std::vector<ScanLevel> levels;

  long long positive_count() const;
  /// Exhaustive scans: the positives are exactly one Petersen graph when the
  /// range reaches 10 vertices, and none otherwise. Corpus scans: every
  /// positive is the Petersen graph.
  bool matches_theorem() const;
};

/// Runs the "every 2-factor is made of 5-cycles" predicate over all connected
/// bridgeless cubic graphs on each even order up to `n_max`, on `jobs`
/// worker threads.
ScanReport scan_theorem(int n_max, bool allow_multi, int jobs = 1,
                        const GeneratorLimits& limits = {});

/// Same predicate over a user-supplied corpus, grouped by vertex count.
/// Disconnected or bridged graphs are counted as generated but not tested;
/// a positive found more than once is listed once.
ScanReport scan_corpus(std::span<const CubicGraph> graphs, int jobs = 1,
                       const std::string& source = "corpus");

}  // namespace fivecycles
