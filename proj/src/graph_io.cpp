#include <sstream>

#include "gemcat/catalog_io.hpp"

namespace gem {

std::string encode_graph(const ColouredGraph& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (Colour c = 0; c < kColours; ++c) {
    out << "c" << c << ":";
    for (Vertex v = 0; v < g.order(); ++v) out << " " << g.neighbour(v, c);
    out << "\n";
  }
  return out.str();
}

ColouredGraph decode_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int order = -1;
  int colour = 0;
  std::vector<std::array<Vertex, kColours>> adj;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string head;
    fields >> head;
    if (order < 0) {
      if (head != "order" || !(fields >> order) || order <= 0 || order % 2 != 0)
        throw ParseError(line_no, static_cast<int>(start) + 1, "expected 'order N' with N even and positive");
      adj.assign(order, {kNoVertex, kNoVertex, kNoVertex, kNoVertex});
      continue;
    }
    if (colour >= kColours) throw ParseError(line_no, static_cast<int>(start) + 1, "unexpected extra line");
    if (head != "c" + std::to_string(colour) + ":")
      throw ParseError(line_no, static_cast<int>(start) + 1, "expected 'c" + std::to_string(colour) + ":'");
    for (Vertex v = 0; v < order; ++v) {
      long w;
      if (!(fields >> w))
        throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected " + std::to_string(order) + " entries");
      if (w < 0 || w >= order) throw ParseError(line_no, static_cast<int>(start) + 1, "neighbour out of range");
      adj[v][colour] = static_cast<Vertex>(w);
    }
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, static_cast<int>(start) + 1, "too many entries");
    ++colour;
  }
  if (order < 0) throw ParseError(line_no + 1, 1, "missing 'order' line");
  if (colour < kColours) throw ParseError(line_no + 1, 1, "missing colour lines");

  std::vector<ColouredEdge> edges;
  for (Vertex v = 0; v < order; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = adj[v][c];
      if (w == v) throw GemError(GemError::Kind::Loop, "loop at vertex " + std::to_string(v));
      if (adj[w][c] != v)
        throw GemError(GemError::Kind::SlotClash, "colour " + std::to_string(c) + " is not an involution at vertex " +
                                                      std::to_string(v));
      if (v < w) edges.push_back({v, w, c});
    }
  return build_graph(order, edges);
}

}  // namespace gem
