#include "gemcat/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gem {

const char* to_string(GemError::Kind kind) {
  switch (kind) {
    case GemError::Kind::IncompleteColouring: return "IncompleteColouring";
    case GemError::Kind::Loop: return "Loop";
    case GemError::Kind::SlotClash: return "SlotClash";
    case GemError::Kind::OddOrder: return "OddOrder";
    case GemError::Kind::NotRegular: return "NotRegular";
    case GemError::Kind::NotConnected: return "NotConnected";
    case GemError::Kind::Disconnected: return "Disconnected";
    case GemError::Kind::NonProperDipole: return "NonProperDipole";
    case GemError::Kind::InvalidPair: return "InvalidPair";
    case GemError::Kind::InvalidConfiguration: return "InvalidConfiguration";
    case GemError::Kind::NoCluster: return "NoCluster";
    case GemError::Kind::NotAGem: return "NotAGem";
    case GemError::Kind::NotAManifold: return "NotAManifold";
    case GemError::Kind::ParseError: return "ParseError";
    case GemError::Kind::AmbiguousResult: return "AmbiguousResult";
    case GemError::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

ColouredGraph::ColouredGraph(int order) {
  if (order < 0) throw GemError(GemError::Kind::OddOrder, "negative order");
  adj_.assign(order, {kNoVertex, kNoVertex, kNoVertex, kNoVertex});
}

void ColouredGraph::link(Vertex v, Vertex w, Colour c) {
  if (v == w) throw GemError(GemError::Kind::Loop, "loop at vertex " + std::to_string(v));
  if (adj_[v][c] != kNoVertex || adj_[w][c] != kNoVertex)
    throw GemError(GemError::Kind::SlotClash,
                   "colour " + std::to_string(c) + " slot already used at " +
                       std::to_string(adj_[v][c] != kNoVertex ? v : w));
  adj_[v][c] = w;
  adj_[w][c] = v;
}

void ColouredGraph::unlink(Vertex v, Colour c) {
  Vertex w = adj_[v][c];
  if (w == kNoVertex) return;
  adj_[v][c] = kNoVertex;
  adj_[w][c] = kNoVertex;
}

bool ColouredGraph::has_colour(Colour c) const {
  return std::any_of(adj_.begin(), adj_.end(), [c](const auto& s) { return s[c] != kNoVertex; });
}

bool ColouredGraph::is_regular(unsigned colour_mask) const {
  for (const auto& s : adj_)
    for (Colour c = 0; c < kColours; ++c)
      if ((colour_mask >> c & 1u) && s[c] == kNoVertex) return false;
  return true;
}

int ColouredGraph::edge_count(Colour c) const {
  int filled = 0;
  for (const auto& s : adj_) filled += s[c] != kNoVertex;
  return filled / 2;
}

void ColouredGraph::check_involutions() const {
  for (Vertex v = 0; v < order(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = adj_[v][c];
      if (w == kNoVertex) continue;
      if (w == v) throw GemError(GemError::Kind::Loop, "loop at vertex " + std::to_string(v));
      if (w < 0 || w >= order() || adj_[w][c] != v)
        throw GemError(GemError::Kind::SlotClash, "broken involution at vertex " + std::to_string(v));
    }
}

ColouredGraph ColouredGraph::disjoint_union(const ColouredGraph& a, const ColouredGraph& b) {
  ColouredGraph out(a.order() + b.order());
  for (Vertex v = 0; v < a.order(); ++v) out.adj_[v] = a.adj_[v];
  for (Vertex v = 0; v < b.order(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = b.adj_[v][c];
      out.adj_[a.order() + v][c] = w == kNoVertex ? kNoVertex : a.order() + w;
    }
  return out;
}

ColouredGraph ColouredGraph::induced(const std::vector<bool>& keep) const {
  std::vector<Vertex> index(order(), kNoVertex);
  int n = 0;
  for (Vertex v = 0; v < order(); ++v)
    if (keep[v]) index[v] = n++;
  ColouredGraph out(n);
  for (Vertex v = 0; v < order(); ++v) {
    if (!keep[v]) continue;
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = adj_[v][c];
      out.adj_[index[v]][c] = w == kNoVertex ? kNoVertex : index[w];
    }
  }
  return out;
}

ColouredGraph ColouredGraph::recoloured(const std::array<Colour, kColours>& perm) const {
  ColouredGraph out(order());
  for (Vertex v = 0; v < order(); ++v)
    for (Colour c = 0; c < kColours; ++c) out.adj_[v][perm[c]] = adj_[v][c];
  return out;
}

ColouredGraph ColouredGraph::relabelled(std::span<const Vertex> relabel) const {
  ColouredGraph out(order());
  for (Vertex v = 0; v < order(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = adj_[v][c];
      out.adj_[relabel[v]][c] = w == kNoVertex ? kNoVertex : relabel[w];
    }
  return out;
}

ColouredGraph build_graph(int order, std::span<const ColouredEdge> edges) {
  if (order <= 0 || order % 2 != 0)
    throw GemError(GemError::Kind::OddOrder, "order must be even and positive");
  ColouredGraph g(order);
  for (const auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= order || e.b >= order || e.colour < 0 || e.colour >= kColours)
      throw GemError(GemError::Kind::SlotClash, "edge endpoint or colour out of range");
    g.link(e.a, e.b, e.colour);
  }
  for (Vertex v = 0; v < order; ++v)
    for (Colour c = 0; c < kColours; ++c)
      if (g.neighbour(v, c) == kNoVertex)
        throw GemError(GemError::Kind::IncompleteColouring,
                       "vertex " + std::to_string(v) + " misses colour " + std::to_string(c));
  return g;
}

ColouredGraph standard_order_two_gem() {
  ColouredGraph g(2);
  for (Colour c = 0; c < kColours; ++c) g.link(0, 1, c);
  return g;
}

std::vector<int> components(const ColouredGraph& g, unsigned colour_mask, int* count) {
  std::vector<int> comp(g.order(), -1);
  int n = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = n;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColours; ++c) {
        if (!(colour_mask >> c & 1u)) continue;
        Vertex w = g.neighbour(v, c);
        if (w != kNoVertex && comp[w] == -1) {
          comp[w] = n;
          stack.push_back(w);
        }
      }
    }
    ++n;
  }
  if (count) *count = n;
  return comp;
}

bool is_connected(const ColouredGraph& g, unsigned colour_mask) {
  int n = 0;
  components(g, colour_mask, &n);
  return n <= 1;
}

std::vector<int> bipartition(const ColouredGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColours; ++c) {
        Vertex w = g.neighbour(v, c);
        if (w == kNoVertex) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return {};
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const ColouredGraph& g) { return g.order() == 0 || !bipartition(g).empty(); }

}  // namespace gem
