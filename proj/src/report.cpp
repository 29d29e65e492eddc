#include "fivecycles/report.hpp"

#include <sstream>

#include "fivecycles/connectivity.hpp"

namespace fivecycles {
namespace {

using nlohmann::json;

json edge_ids(const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(e.value);
  return out;
}

std::string braces(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string brackets(const std::vector<EdgeId>& edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges[i].value);
  }
  return out + "]";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

GraphAnalysis analyze(const CubicGraph& g) {
  GraphAnalysis a;
  a.order = g.order();
  a.size = g.size();
  a.simple = g.is_simple();
  a.connected = is_connected(g);
  a.girth = girth(g);
  a.edge_connectivity = a.connected ? edge_connectivity(g) : 0;
  a.bridges = bridges(g);
  a.matchings = enumerate_perfect_matchings(g);
  for (const auto& m : a.matchings) a.spectra.push_back(cycle_spectrum(complementary_two_factor(g, m)));
  a.premise_holds = all_two_factors_are_five_cycles(g);
  return a;
}

json to_json(const GraphAnalysis& a) {
  json two_factors = json::array();
  for (std::size_t i = 0; i < a.matchings.size(); ++i) {
    two_factors.push_back({{"matching", edge_ids(a.matchings[i].edges)}, {"spectrum", a.spectra[i].lengths}});
  }
  return {{"kind", "analysis"},
          {"schema_version", kSchemaVersion},
          {"n", a.order},
          {"edges", a.size},
          {"simple", a.simple},
          {"connected", a.connected},
          {"girth", a.girth},
          {"edge_connectivity", a.edge_connectivity},
          {"bridges", edge_ids(a.bridges)},
          {"perfect_matching_count", a.matchings.size()},
          {"two_factors", two_factors},
          {"premise_holds", a.premise_holds}};
}

json to_json(const ClaimReport& r) {
  json claims = json::object();
  for (const auto& [id, result] : r.claims) {
    claims[claim_key(id)] = {{"holds", result.holds}, {"witness", result.witness}};
  }
  return {{"kind", "claims"},
          {"schema_version", kSchemaVersion},
          {"n", r.order},
          {"certificate", r.certificate},
          {"labeling", r.labeling},
          {"bridgeless", r.bridgeless},
          {"premise_holds", r.premise_holds},
          {"premise_witness", r.premise_witness},
          {"is_petersen", r.is_petersen},
          {"consistent_with_theorem", r.consistent_with_theorem()},
          {"claims", claims}};
}

json to_json(const ScanReport& r, bool with_timing) {
  json levels = json::array();
  for (const auto& level : r.levels) {
    json positives = json::array();
    for (const auto& p : level.premise_positive) {
      positives.push_back({{"certificate", p.certificate}, {"sparse6", p.sparse6}, {"is_petersen", p.is_petersen}});
    }
    json entry = {{"n", level.n},
                  {"generated", level.generated},
                  {"bridgeless", level.bridgeless},
                  {"premise_positive", positives}};
    if (with_timing) entry["elapsed_seconds"] = level.elapsed_seconds;
    levels.push_back(entry);
  }
  return {{"kind", "scan"},
          {"schema_version", kSchemaVersion},
          {"source", r.source},
          {"exhaustive", r.exhaustive},
          {"allow_multi", r.allow_multi},
          {"n_range", r.n_range},
          {"levels", levels},
          {"positive_count", r.positive_count()},
          {"matches_theorem", r.matches_theorem()}};
}

std::string to_text(const GraphAnalysis& a) {
  std::ostringstream out;
  out << "n: " << a.order << '\n'
      << "edges: " << a.size << '\n'
      << "simple: " << yes_no(a.simple) << '\n'
      << "connected: " << yes_no(a.connected) << '\n'
      << "girth: " << a.girth << '\n'
      << "edge_connectivity: " << a.edge_connectivity << '\n'
      << "bridges: " << brackets(a.bridges) << '\n'
      << "perfect_matching_count: " << a.matchings.size() << '\n';
  for (std::size_t i = 0; i < a.matchings.size(); ++i) {
    out << "two_factor " << i << ": matching " << brackets(a.matchings[i].edges) << " spectrum "
        << braces(a.spectra[i].lengths) << '\n';
  }
  out << "premise_holds: " << yes_no(a.premise_holds) << '\n';
  return out.str();
}

std::string to_text(const ClaimReport& r) {
  std::ostringstream out;
  out << "n: " << r.order << '\n'
      << "certificate: " << r.certificate << '\n'
      << "bridgeless: " << yes_no(r.bridgeless) << '\n'
      << "premise_holds: " << yes_no(r.premise_holds) << '\n';
  if (!r.premise_witness.is_null()) out << "premise_witness: " << r.premise_witness.dump() << '\n';
  for (const auto& [id, result] : r.claims) {
    out << claim_key(id) << ": " << (result.holds ? "holds" : "fails");
    if (!result.witness.is_null()) out << "  " << result.witness.dump();
    out << '\n';
  }
  out << "is_petersen: " << yes_no(r.is_petersen) << '\n'
      << "consistent_with_theorem: " << yes_no(r.consistent_with_theorem()) << '\n';
  return out.str();
}

std::string to_text(const ScanReport& r) {
  std::ostringstream out;
  out << "source: " << r.source << (r.allow_multi ? " (multigraphs)" : " (simple graphs)") << '\n';
  for (const auto& level : r.levels) {
    out << "n=" << level.n << ": generated " << level.generated << ", bridgeless " << level.bridgeless
        << ", premise-positive " << level.premise_positive.size() << " (" << level.elapsed_seconds << " s)\n";
    for (const auto& p : level.premise_positive) {
      out << "  positive " << p.sparse6 << (p.is_petersen ? " [Petersen]" : " [NOT Petersen]") << '\n';
    }
  }
  out << "positive_count: " << r.positive_count() << '\n'
      << "matches_theorem: " << yes_no(r.matches_theorem()) << '\n';
  return out.str();
}

}  // namespace fivecycles
