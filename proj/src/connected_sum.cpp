#include <algorithm>

#include "gemcat/moves.hpp"

namespace gem {

ColouredGraph graph_connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2) {
  if (!g1.is_regular() || !g2.is_regular())
    throw GemError(GemError::Kind::NotRegular, "connected sum needs closed graphs");
  std::vector<bool> k1(g1.order(), true), k2(g2.order(), true);
  k1[v1] = false;
  k2[v2] = false;
  ColouredGraph out = ColouredGraph::disjoint_union(g1.induced(k1), g2.induced(k2));
  const int offset = g1.order() - 1;
  auto shift1 = [&](Vertex v) { return v > v1 ? v - 1 : v; };
  auto shift2 = [&](Vertex v) { return offset + (v > v2 ? v - 1 : v); };
  for (Colour c = 0; c < kColours; ++c) out.link(shift1(g1.neighbour(v1, c)), shift2(g2.neighbour(v2, c)), c);
  return out;
}

namespace {

using Cut = std::array<std::pair<Vertex, Vertex>, kColours>;

bool in_cut(const Cut& cut, Vertex v, Vertex w, Colour c) {
  return cut[c] == std::make_pair(std::min(v, w), std::max(v, w));
}

// Side (0/1) of every vertex once the cut is removed, or empty if the cut does
// not separate the graph into two parts of order at least 3 with every cut
// edge crossing.
std::vector<int> sides(const ColouredGraph& g, const Cut& cut) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack{cut[0].first};
  side[cut[0].first] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = g.neighbour(v, c);
      if (in_cut(cut, v, w, c)) continue;
      if (side[w] == -1) {
        side[w] = 0;
        stack.push_back(w);
      }
    }
  }
  int first = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) ++first;
    else side[v] = 1;
  }
  if (first < 3 || n - first < 3) return {};
  for (const auto& e : cut)
    if (side[e.first] == side[e.second]) return {};
  // The far side must itself be connected.
  std::vector<int> seen(n, 0);
  Vertex start = cut[0].second;
  stack.push_back(start);
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = g.neighbour(v, c);
      if (in_cut(cut, v, w, c) || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  if (count != n - first) return {};
  return side;
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> edges_by_colour(const ColouredGraph& g) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out(kColours);
  for (Colour c = 0; c < kColours; ++c)
    for (Vertex v = 0; v < g.order(); ++v)
      if (v < g.neighbour(v, c)) out[c].push_back({v, g.neighbour(v, c)});
  return out;
}

template <class Visit>
void for_each_quadruple(const ColouredGraph& g, Visit visit) {
  auto edges = edges_by_colour(g);
  Cut cut;
  for (const auto& e0 : edges[0])
    for (const auto& e1 : edges[1])
      for (const auto& e2 : edges[2])
        for (const auto& e3 : edges[3]) {
          cut = {e0, e1, e2, e3};
          auto side = sides(g, cut);
          if (!side.empty() && !visit(cut, side)) return;
        }
}

ColouredGraph capped(const ColouredGraph& g, const Cut& cut, const std::vector<int>& side, int which) {
  std::vector<bool> keep(g.order());
  std::vector<Vertex> renumber(g.order(), kNoVertex);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((keep[v] = side[v] == which)) renumber[v] = next++;
  ColouredGraph part = g.induced(keep);
  ColouredGraph out(next + 1);
  for (Vertex v = 0; v < next; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = part.neighbour(v, c);
      if (w != kNoVertex && v < w) out.link(v, w, c);
    }
  for (Colour c = 0; c < kColours; ++c) {
    Vertex end = side[cut[c].first] == which ? cut[c].first : cut[c].second;
    out.link(renumber[end], next, c);
  }
  return out;
}

}  // namespace

std::vector<std::array<std::pair<Vertex, Vertex>, kColours>> disconnecting_quadruples(const ColouredGraph& g) {
  if (!g.is_regular()) throw GemError(GemError::Kind::NotRegular, "quadruple search needs a closed graph");
  std::vector<Cut> out;
  for_each_quadruple(g, [&](const Cut& cut, const std::vector<int>&) {
    out.push_back(cut);
    return true;
  });
  return out;
}

std::optional<SplitResult> split_connected_sum(const ColouredGraph& g) {
  if (!g.is_regular()) throw GemError(GemError::Kind::NotRegular, "split needs a closed graph");
  std::optional<SplitResult> out;
  for_each_quadruple(g, [&](const Cut& cut, const std::vector<int>& side) {
    int first_side = side[cut[0].first];
    out = SplitResult{capped(g, cut, side, first_side), capped(g, cut, side, 1 - first_side), cut};
    return false;
  });
  return out;
}

}  // namespace gem
