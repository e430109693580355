#include "tb/graph6.hpp"

#include <sstream>

#include "tb/error.hpp"

namespace tb {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw CapacityError("graph6 encoding is limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", i);
  }
  if (text[0] == '~') throw ParseError("graph6 sizes above 62 vertices are not supported", 0);
  const int n = text[0] - 63;
  if (n > max_vertices()) throw CapacityError("graph6 input has more vertices than the cap");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = 1 + (bits + 5) / 6;
  if (text.size() != want) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - 1) + " bytes, expected " +
                         std::to_string(want - 1),
                     text.size() < want ? text.size() : want);
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int pad = (text.back() - 63) & ((1 << (6 - bits % 6)) - 1);
    if (pad != 0) throw ParseError("nonzero padding bits", text.size() - 1);
  }
  return g;
}

std::string export_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (static_cast<std::size_t>(v) < labels.size()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tb
