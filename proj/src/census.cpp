#include "gemcat/census.hpp"

#include <algorithm>
#include <numeric>

namespace gem {

int pair_index(Colour i, Colour j) {
  if (i > j) std::swap(i, j);
  for (int p = 0; p < 6; ++p)
    if (kColourPairs[p][0] == i && kColourPairs[p][1] == j) return p;
  throw GemError(GemError::Kind::InvalidConfiguration, "not a colour pair");
}

int complementary_pair(int pair) { return 5 - pair; }

int CycleCensus::total() const {
  int t = 0;
  for (const auto& c : cycles) t += static_cast<int>(c.size());
  return t;
}

std::vector<Cycle> bicoloured_cycles(const ColouredGraph& g, Colour i, Colour j, std::vector<int>* cycle_of) {
  if (i > j) std::swap(i, j);
  std::vector<Cycle> out;
  std::vector<int> owner(g.order(), -2);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (owner[s] != -2) continue;
    Cycle cyc;
    Vertex v = s;
    Colour c = i;
    bool closed = true;
    do {
      cyc.push_back(v);
      owner[v] = -1;
      Vertex w = g.neighbour(v, c);
      if (w == kNoVertex) {
        closed = false;
        break;
      }
      v = w;
      c = c == i ? j : i;
    } while (v != s);
    if (!closed) {
      // Walk the other way too so the whole open path is marked visited.
      Vertex u = g.neighbour(s, j);
      Colour cc = i;
      while (u != kNoVertex && owner[u] == -2) {
        owner[u] = -1;
        u = g.neighbour(u, cc);
        cc = cc == i ? j : i;
      }
      continue;
    }
    int id = static_cast<int>(out.size());
    for (Vertex x : cyc) owner[x] = id;
    out.push_back(std::move(cyc));
  }
  if (cycle_of) {
    cycle_of->assign(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) (*cycle_of)[v] = owner[v] >= 0 ? owner[v] : -1;
  }
  return out;
}

CycleCensus cycle_census(const ColouredGraph& g) {
  CycleCensus census;
  for (int p = 0; p < 6; ++p)
    census.cycles[p] = bicoloured_cycles(g, kColourPairs[p][0], kColourPairs[p][1], &census.cycle_of[p]);
  return census;
}

ResidueCensus residue_census(const ColouredGraph& g) {
  ResidueCensus census;
  for (Colour i = 0; i < kColours; ++i) {
    unsigned mask = mask_without(i);
    int n = 0;
    auto comp = components(g, mask, &n);
    census.components[i] = n;
    std::vector<bool> open(n, false);
    for (Vertex v = 0; v < g.order(); ++v)
      for (Colour c = 0; c < kColours; ++c)
        if (c != i && g.neighbour(v, c) == kNoVertex) open[comp[v]] = true;
    census.boundary_components[i] = static_cast<int>(std::count(open.begin(), open.end(), true));
  }
  return census;
}

int euler_characteristic(const ColouredGraph& g) {
  auto residues = residue_census(g);
  int vertices = std::accumulate(residues.components.begin(), residues.components.end(), 0);
  return vertices - cycle_census(g).total() + g.order();
}

bool is_sphere_gem(const ColouredGraph& g, std::array<Colour, 3> colours) {
  unsigned mask = 0;
  for (Colour c : colours) mask |= 1u << c;
  if (!g.is_regular(mask)) throw GemError(GemError::Kind::NotRegular, "3-coloured graph is not regular");
  if (!is_connected(g, mask)) throw GemError(GemError::Kind::NotConnected, "3-coloured graph is not connected");
  int faces = static_cast<int>(bicoloured_cycles(g, colours[0], colours[1]).size() +
                               bicoloured_cycles(g, colours[0], colours[2]).size() +
                               bicoloured_cycles(g, colours[1], colours[2]).size());
  return faces == g.order() / 2 + 2;
}

bool residue_is_spherical(const ColouredGraph& g, Colour i) {
  unsigned mask = mask_without(i);
  if (!g.is_regular(mask)) return false;
  int n = 0;
  auto comp = components(g, mask, &n);
  std::vector<int> size(n, 0), faces(n, 0);
  for (Vertex v = 0; v < g.order(); ++v) ++size[comp[v]];
  for (int p = 0; p < 6; ++p) {
    Colour a = kColourPairs[p][0], b = kColourPairs[p][1];
    if (a == i || b == i) continue;
    for (const auto& cyc : bicoloured_cycles(g, a, b)) ++faces[comp[cyc.front()]];
  }
  for (int k = 0; k < n; ++k)
    if (faces[k] != size[k] / 2 + 2) return false;
  return true;
}

ManifoldCheck manifold_check(const ColouredGraph& g) {
  ManifoldCheck out;
  out.bipartite = is_bipartite(g);
  if (g.order() == 0 || !g.is_regular()) return out;
  out.is_gem = true;
  for (Colour i = 0; i < kColours && out.is_gem; ++i) out.is_gem = residue_is_spherical(g, i);
  if (!out.is_gem) return out;
  out.is_crystallization = is_connected(g);
  for (Colour i = 0; i < kColours && out.is_crystallization; ++i)
    out.is_crystallization = is_connected(g, mask_without(i));
  return out;
}

bool is_crystallization(const ColouredGraph& g) { return manifold_check(g).is_crystallization; }

}  // namespace gem
