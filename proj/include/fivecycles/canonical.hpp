#pragma once

#include <string>
#include <vector>

#include "fivecycles/graph.hpp"

namespace fivecycles {

/// Isomorphism-invariant form of a cubic multigraph.
///
/// `labeling[v]` is the canonical label of input vertex `v`. The certificate
/// encodes the vertex count and, for each canonical label in turn, the sorted
/// canonical labels of its three neighbors (parallel edges repeat a label).
/// Labels are chosen by a minimal breadth-first code, so two graphs are
/// isomorphic exactly when their certificates are equal.
struct CanonicalForm {
  std::vector<Vertex> labeling;
  std::string certificate;
};

CanonicalForm canonical_form(const CubicGraph& g);

bool is_isomorphic(const CubicGraph& g, const CubicGraph& h);

/// `g` relabeled canonically, with edges re-numbered in ascending
/// (smaller endpoint, larger endpoint) order. Depends only on the
/// isomorphism class of `g`.
CubicGraph canonical_graph(const CubicGraph& g);

/// Lowercase hex rendering of a certificate, for reports.
std::string certificate_hex(const std::string& certificate);

}  // namespace fivecycles
