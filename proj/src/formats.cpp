#include "fivecycles/formats.hpp"

#include <algorithm>
#include <sstream>

namespace fivecycles {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw FormatError("byte " + std::to_string(static_cast<unsigned char>(c)) +
                      " is outside the printable range 63..126");
  }
  return value;
}

// Reads N(n) and returns the number of bytes consumed.
std::size_t read_order(std::string_view s, long long& n) {
  if (s.empty()) throw FormatError("missing vertex count");
  if (s[0] != 126) {
    n = sextet(s[0]);
    return 1;
  }
  if (s.size() >= 2 && s[1] == 126) {
    if (s.size() < 8) throw FormatError("truncated 36-bit vertex count");
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(s[i]);
    return 8;
  }
  if (s.size() < 4) throw FormatError("truncated 18-bit vertex count");
  n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(s[i]);
  return 4;
}

void write_order(std::string& out, long long n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

int bits_for(long long n) {
  int nb = 0;
  for (long long i = n - 1; i > 0; i >>= 1) ++nb;
  return nb;
}

class BitWriter {
 public:
  void put(bool bit) {
    current_ = (current_ << 1) | (bit ? 1 : 0);
    if (++filled_ == 6) flush();
  }
  void put(long long value, int width) {
    for (int b = width - 1; b >= 0; --b) put(((value >> b) & 1) != 0);
  }
  int room() const { return filled_ == 0 ? 6 : 6 - filled_; }
  bool partial() const { return filled_ != 0; }
  std::string take() { return std::move(out_); }
  std::string& bytes() { return out_; }

 private:
  void flush() {
    out_.push_back(static_cast<char>(current_ + kBias));
    current_ = 0;
    filled_ = 0;
  }
  int current_ = 0;
  int filled_ = 0;
  std::string out_;
};

int checked_order(long long n) {
  if (n > 1'000'000) throw FormatError("vertex count " + std::to_string(n) + " is unreasonably large");
  return static_cast<int>(n);
}

}  // namespace

CubicGraph parse_graph6(std::string_view text) {
  text = trim_line(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  long long order = 0;
  const auto used = read_order(text, order);
  const int n = checked_order(order);
  text.remove_prefix(used);

  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const auto need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != need) {
    throw FormatError("graph6 body has " + std::to_string(text.size()) + " bytes, expected " +
                      std::to_string(need));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return CubicGraph::from_edge_list(n, edges);
}

CubicGraph parse_sparse6(std::string_view text) {
  text = trim_line(text);
  if (text.starts_with(kSparse6Header)) text.remove_prefix(kSparse6Header.size());
  if (text.empty() || text[0] != ':') throw FormatError("sparse6 text must start with ':'");
  text.remove_prefix(1);
  long long order = 0;
  text.remove_prefix(read_order(text, order));
  const int n = checked_order(order);
  const int nb = bits_for(n);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t pos = 0;
  int byte = 0;
  int left = 0;  // unread bits in `byte`
  auto next_bit = [&](int& bit) {
    if (left == 0) {
      if (pos == text.size()) return false;
      byte = sextet(text[pos++]);
      left = 6;
    }
    bit = (byte >> --left) & 1;
    return true;
  };

  long long v = 0;
  for (;;) {
    int b = 0;
    if (!next_bit(b)) break;
    long long x = 0;
    bool complete = true;
    for (int i = 0; i < nb; ++i) {
      int bit = 0;
      if (!next_bit(bit)) {
        complete = false;
        break;
      }
      x = (x << 1) | bit;
    }
    if (!complete) break;
    if (b) ++v;
    if (x > v) {
      v = x;
    } else if (v < n) {
      if (x == v) {
        throw GraphError(GraphErrorKind::Loop, "sparse6 input has a loop at vertex " + std::to_string(v));
      }
      edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
    }
  }
  return CubicGraph::from_edge_list(n, edges);
}

CubicGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw FormatError("edge list must start with \"n m\"");
  if (n < 0 || m < 0) throw FormatError("edge list header has a negative count");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw FormatError("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) +
                        " edges");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw FormatError("unexpected trailing text in edge list: " + rest);
  return CubicGraph::from_edge_list(checked_order(n), edges);
}

std::string emit_sparse6(const CubicGraph& g) {
  const int n = g.order();
  const int nb = bits_for(n);
  std::vector<std::pair<Vertex, Vertex>> order;  // (larger, smaller)
  for (const auto& e : g.edges()) order.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(order.begin(), order.end());

  BitWriter bits;
  bits.bytes().push_back(':');
  write_order(bits.bytes(), n);
  int last = 0;
  for (auto [j, i] : order) {
    if (j == last) {
      bits.put(false);
    } else {
      bits.put(true);
      if (j > last + 1) {
        bits.put(j, nb);
        bits.put(false);
      }
      last = j;
    }
    bits.put(i, nb);
  }
  if (bits.partial()) {
    const int k = bits.room();
    // A run of 1s could decode as an extra edge at vertex n-1 here.
    const bool guard = k >= nb + 1 && last == n - 2 && n == (1 << nb);
    if (guard) bits.put(false);
    while (bits.partial()) bits.put(true);
  }
  return bits.take();
}

std::string emit_graph6(const CubicGraph& g) {
  if (!g.is_simple()) throw FormatError("graph6 cannot represent parallel edges");
  const int n = g.order();
  std::string out;
  write_order(out, n);
  BitWriter bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.put(g.adjacent(i, j));
  }
  while (bits.partial()) bits.put(false);
  return out + bits.take();
}

std::string emit_edge_list(const CubicGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

CubicGraph parse_graph_line(std::string_view line) {
  line = trim_line(line);
  if (line.starts_with(kSparse6Header) || line.starts_with(":")) return parse_sparse6(line);
  return parse_graph6(line);
}

std::vector<CubicGraph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<CubicGraph> out;
  if (format == GraphFormat::EdgeList) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out.push_back(parse_edge_list(buffer.str()));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (trim_line(line).empty()) continue;
    out.push_back(format == GraphFormat::Sparse6 ? parse_sparse6(line) : parse_graph6(line));
  }
  return out;
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "sparse6" || name == "s6") return GraphFormat::Sparse6;
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  throw FormatError("unknown graph format: " + std::string(name));
}

}  // namespace fivecycles
