#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fivecycles/enumeration.hpp"
#include "fivecycles/graph.hpp"
#include "fivecycles/matching.hpp"
#include "fivecycles/verifier.hpp"

namespace fivecycles {

/// Structural profile printed by `fivecycles analyze`.
struct GraphAnalysis {
  int order = 0;
  int size = 0;
  bool simple = true;
  bool connected = true;
  int girth = 0;
  int edge_connectivity = 0;  // 0 when disconnected
  std::vector<EdgeId> bridges;
  std::vector<PerfectMatching> matchings;
  std::vector<CycleSpectrum> spectra;  // parallel to `matchings`
  bool premise_holds = false;
};

GraphAnalysis analyze(const CubicGraph& g);

// Every JSON document carries "kind" and "schema_version"; the layout is
// described by docs/report.schema.json.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const GraphAnalysis& a);
nlohmann::json to_json(const ClaimReport& r);
/// `with_timing` false drops the elapsed-time fields.
nlohmann::json to_json(const ScanReport& r, bool with_timing = true);

std::string to_text(const GraphAnalysis& a);
std::string to_text(const ClaimReport& r);
std::string to_text(const ScanReport& r);

}  // namespace fivecycles
