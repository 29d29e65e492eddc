#include "fivecycles/canonical.hpp"

#include <algorithm>

#include "bfs_code.hpp"

namespace fivecycles {
namespace {

detail::PartialCubic to_partial(const CubicGraph& g) {
  detail::PartialCubic p(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& inc : g.incident(v)) p.nbr[v][p.degree[v]++] = inc.neighbor;
  }
  return p;
}

void put_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

}  // namespace

CanonicalForm canonical_form(const CubicGraph& g) {
  const auto best = detail::minimal_code(to_partial(g));
  CanonicalForm form;
  form.labeling = best.label;
  form.certificate.reserve(2 + 2 * best.code.size());
  put_u16(form.certificate, g.order());
  for (int entry : best.code) put_u16(form.certificate, entry);
  return form;
}

bool is_isomorphic(const CubicGraph& g, const CubicGraph& h) {
  if (g.order() != h.order()) return false;
  return canonical_form(g).certificate == canonical_form(h).certificate;
}

CubicGraph canonical_graph(const CubicGraph& g) {
  const auto form = canonical_form(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& e : g.edges()) {
    pairs.push_back(std::minmax(form.labeling[e.u], form.labeling[e.v]));
  }
  std::sort(pairs.begin(), pairs.end());
  return CubicGraph::from_edge_list(g.order(), pairs);
}

std::string certificate_hex(const std::string& certificate) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * certificate.size());
  for (unsigned char c : certificate) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

}  // namespace fivecycles
