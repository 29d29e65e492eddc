#include "fivecycles/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "fivecycles/canonical.hpp"
#include "fivecycles/connectivity.hpp"
#include "fivecycles/formats.hpp"
#include "fivecycles/matching.hpp"

namespace fivecycles {
namespace {

struct Verdict {
  bool tested = false;  // connected and bridgeless
  bool positive = false;
};

// Evaluates the premise on every graph using a pool of `jobs` workers that
// pull indices from a shared counter; results land in per-graph slots.
std::vector<Verdict> evaluate(std::span<const CubicGraph> graphs, int jobs) {
  std::vector<Verdict> verdicts(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const auto& g = graphs[i];
      auto& out = verdicts[i];
      out.tested = is_connected(g) && bridges(g).empty();
      out.positive = out.tested && all_two_factors_are_five_cycles(g);
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return verdicts;
}

ScanLevel summarize(int n, std::span<const CubicGraph> graphs, const std::vector<Verdict>& verdicts) {
  static const std::string petersen_certificate = canonical_form(petersen()).certificate;
  ScanLevel level;
  level.n = n;
  level.generated = static_cast<long long>(graphs.size());
  std::map<std::string, PositiveInstance> positives;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (verdicts[i].tested) ++level.bridgeless;
    if (!verdicts[i].positive) continue;
    const auto form = canonical_form(graphs[i]);
    auto& entry = positives[form.certificate];
    entry.certificate = certificate_hex(form.certificate);
    entry.sparse6 = emit_sparse6(canonical_graph(graphs[i]));
    entry.is_petersen = form.certificate == petersen_certificate;
  }
  for (auto& [key, positive] : positives) level.premise_positive.push_back(std::move(positive));
  return level;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<CubicGraph> filter_bridgeless(std::span<const CubicGraph> graphs) {
  std::vector<CubicGraph> out;
  for (const auto& g : graphs) {
    if (bridges(g).empty()) out.push_back(g);
  }
  return out;
}

long long ScanReport::positive_count() const {
  long long total = 0;
  for (const auto& level : levels) total += static_cast<long long>(level.premise_positive.size());
  return total;
}

bool ScanReport::matches_theorem() const {
  bool all_petersen = true;
  for (const auto& level : levels) {
    for (const auto& p : level.premise_positive) all_petersen = all_petersen && p.is_petersen;
  }
  if (!exhaustive) return all_petersen;
  const bool reaches_ten = std::find(n_range.begin(), n_range.end(), 10) != n_range.end();
  return all_petersen && positive_count() == (reaches_ten ? 1 : 0);
}

ScanReport scan_theorem(int n_max, bool allow_multi, int jobs, const GeneratorLimits& limits) {
  check_order(n_max, allow_multi, limits);
  ScanReport report;
  report.allow_multi = allow_multi;
  report.exhaustive = true;
  report.source = "generator";
  for (int n = allow_multi ? 2 : 4; n <= n_max; n += 2) {
    const auto start = std::chrono::steady_clock::now();
    const auto graphs = generate_cubic_graphs(n, allow_multi, limits);
    auto level = summarize(n, graphs, evaluate(graphs, jobs));
    level.elapsed_seconds = seconds_since(start);
    report.n_range.push_back(n);
    report.levels.push_back(std::move(level));
  }
  return report;
}

ScanReport scan_corpus(std::span<const CubicGraph> graphs, int jobs, const std::string& source) {
  std::map<int, std::vector<CubicGraph>> by_order;
  for (const auto& g : graphs) by_order[g.order()].push_back(g);
  ScanReport report;
  report.exhaustive = false;
  report.source = source;
  report.allow_multi = std::any_of(graphs.begin(), graphs.end(), [](const CubicGraph& g) { return !g.is_simple(); });
  for (const auto& [n, group] : by_order) {
    const auto start = std::chrono::steady_clock::now();
    auto level = summarize(n, group, evaluate(group, jobs));
    level.elapsed_seconds = seconds_since(start);
    report.n_range.push_back(n);
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace fivecycles
