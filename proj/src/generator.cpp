#include <algorithm>

#include "bfs_code.hpp"
#include "fivecycles/enumeration.hpp"

namespace fivecycles {
namespace {

// Builds graphs in breadth-first labeled form: vertex v (already discovered)
// receives its missing neighbors as a nondecreasing target list drawn from
// discovered vertices above v and the next undiscovered labels. Every BFS
// labeling of every connected cubic graph arises exactly once, and a
// partial graph is abandoned as soon as some other BFS labeling of its
// completed part has a smaller code.
class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, bool allow_multi, const std::function<void(const CubicGraph&)>& sink)
      : n_(n), allow_multi_(allow_multi), sink_(sink), g_(n) {}

  void run() {
    next_new_ = 1;
    process(0);
  }

 private:
  void process(int v) {
    if (v == n_) {
      emit();
      return;
    }
    if (v >= next_new_) return;  // would be disconnected
    choose(v, v + 1);
  }

  void choose(int v, int lo) {
    if (g_.complete(v)) {
      if (canonical_prefix(v)) process(v + 1);
      return;
    }
    const int hi = std::min(next_new_, n_ - 1);
    for (int t = lo; t <= hi; ++t) {
      if (g_.complete(t)) continue;
      const bool fresh = t == next_new_;
      if (fresh) ++next_new_;
      g_.add_edge(v, t);
      choose(v, allow_multi_ ? t : t + 1);
      g_.remove_last_edge(v, t);
      if (fresh) --next_new_;
    }
  }

  bool canonical_prefix(int v) {
    int rows = v + 1;
    while (rows < n_ && g_.complete(rows)) ++rows;
    const auto code = detail::identity_code(g_, rows);
    return !detail::exists_smaller_code(g_, code, rows);
  }

  void emit() {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(3 * n_ / 2));
    for (int v = 0; v < n_; ++v) {
      auto row = g_.nbr[v];
      std::sort(row.begin(), row.end());
      for (int t : row) {
        if (t > v) pairs.emplace_back(v, t);
      }
    }
    sink_(CubicGraph::from_edge_list(n_, pairs));
  }

  int n_;
  bool allow_multi_;
  const std::function<void(const CubicGraph&)>& sink_;
  detail::PartialCubic g_;
  int next_new_ = 0;
};

}  // namespace

void check_order(int n, bool allow_multi, const GeneratorLimits& limits) {
  if (n < 2 || n % 2 != 0) {
    throw EnumerationError("vertex count must be even and at least 2; got " + std::to_string(n));
  }
  const int cap = allow_multi ? limits.max_multi : limits.max_simple;
  if (n > cap) {
    throw EnumerationError("vertex count " + std::to_string(n) + " exceeds the " +
                           (allow_multi ? "multigraph" : "simple graph") + " limit of " +
                           std::to_string(cap));
  }
}

void generate_cubic_graphs(int n, bool allow_multi,
                           const std::function<void(const CubicGraph&)>& sink,
                           const GeneratorLimits& limits) {
  check_order(n, allow_multi, limits);
  OrderlyGenerator(n, allow_multi, sink).run();
}

std::vector<CubicGraph> generate_cubic_graphs(int n, bool allow_multi,
                                              const GeneratorLimits& limits) {
  std::vector<CubicGraph> out;
  generate_cubic_graphs(n, allow_multi, [&](const CubicGraph& g) { out.push_back(g); }, limits);
  return out;
}

}  // namespace fivecycles
