#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fivecycles/graph.hpp"

namespace fivecycles {

/// Malformed text in one of the graph interchange formats. Graphs that decode
/// but are not cubic raise GraphError instead.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { Graph6, Sparse6, EdgeList };

/// graph6 / sparse6 as defined by nauty's formats.txt. The optional
/// ">>graph6<<" / ">>sparse6<<" header and a trailing newline are accepted.
CubicGraph parse_graph6(std::string_view text);
CubicGraph parse_sparse6(std::string_view text);

/// Edge-list text: "n m" on the first line, then m lines "u v".
CubicGraph parse_edge_list(std::string_view text);

/// Canonical sparse6 bytes (no header, no newline). Edges are written in
/// ascending (larger endpoint, smaller endpoint) order, the byte form nauty
/// produces for a graph with sorted adjacency lists.
std::string emit_sparse6(const CubicGraph& g);
/// graph6 bytes (no header, no newline). Throws FormatError for multigraphs.
std::string emit_graph6(const CubicGraph& g);
std::string emit_edge_list(const CubicGraph& g);

/// Sniffs the format of one graph6/sparse6 line (':' prefix means sparse6).
CubicGraph parse_graph_line(std::string_view line);

/// Reads every graph from a stream. graph6 and sparse6 inputs hold one graph
/// per non-empty line; the edge-list format holds a single graph.
std::vector<CubicGraph> read_graphs(std::istream& in, GraphFormat format);

GraphFormat parse_format_name(std::string_view name);

}  // namespace fivecycles
