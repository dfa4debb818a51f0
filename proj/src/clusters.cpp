#include <algorithm>
#include <bit>

#include "gemcat/moves.hpp"

namespace gem {

namespace {

Cycle cycle_through(const ColouredGraph& g, Vertex v, Colour a, Colour b, size_t limit) {
  Cycle out;
  Vertex x = v;
  Colour c = a;
  do {
    out.push_back(x);
    if (out.size() > limit) return out;
    x = g.neighbour(x, c);
    c = c == a ? b : a;
  } while (x != v);
  return out;
}

std::string pair_string(int p) {
  return std::string(1, static_cast<char>('0' + kColourPairs[p][0])) +
         static_cast<char>('0' + kColourPairs[p][1]);
}

}  // namespace

std::vector<ClusterVertex> find_cluster_vertices(const ColouredGraph& g) {
  std::vector<ClusterVertex> out;
  std::vector<int> seen(g.order(), 0);
  int stamp = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> short_pairs;
    std::array<Cycle, 6> cyc;
    for (int p = 0; p < 6; ++p) {
      cyc[p] = cycle_through(g, v, kColourPairs[p][0], kColourPairs[p][1], 4);
      if (cyc[p].size() == 4) short_pairs.push_back(p);
    }
    if (short_pairs.size() < 4) continue;
    // First 4-subset (in pair order) whose union has exactly nine vertices.
    const int k = static_cast<int>(short_pairs.size());
    bool found = false;
    for (unsigned sub = 0; sub < (1u << k) && !found; ++sub) {
      if (std::popcount(sub) != 4) continue;
      ++stamp;
      std::vector<Vertex> involved;
      for (int b = 0; b < k; ++b)
        if (sub >> b & 1u)
          for (Vertex x : cyc[short_pairs[b]])
            if (seen[x] != stamp) {
              seen[x] = stamp;
              involved.push_back(x);
            }
      if (involved.size() != 9) continue;
      ClusterVertex cv;
      cv.v = v;
      int slot = 0;
      for (int b = 0; b < k; ++b)
        if (sub >> b & 1u) {
          cv.pairs[slot] = short_pairs[b];
          cv.cycles[slot++] = cyc[short_pairs[b]];
        }
      std::sort(involved.begin(), involved.end());
      cv.involved = std::move(involved);
      out.push_back(std::move(cv));
      found = true;
    }
  }
  return out;
}

namespace {

// The two colour pairs not used by the four short cycles.
std::pair<int, int> long_pairs(const ClusterVertex& cv) {
  bool used[6] = {};
  for (int p : cv.pairs) used[p] = true;
  int first = -1, second = -1;
  for (int p = 0; p < 6; ++p)
    if (!used[p]) (first < 0 ? first : second) = p;
  return {first, second};
}

bool touches(const DipoleSite& site, const std::vector<char>& focus) {
  for (Colour c = 0; c < kColours; ++c)
    if (site.tail[c] != kNoVertex && (focus[site.tail[c]] || focus[site.head[c]])) return true;
  return false;
}

std::string site_string(const DipoleSite& s) {
  std::string out = "colours=";
  for (Colour c = 0; c < kColours; ++c)
    if (s.colours >> c & 1u) out += static_cast<char>('0' + c);
  for (Colour c = 0; c < kColours; ++c)
    if (s.tail[c] != kNoVertex)
      out += " " + std::to_string(c) + ":(" + std::to_string(s.tail[c]) + "," + std::to_string(s.head[c]) + ")";
  return out;
}

std::string dipole_string(const Dipole& d) {
  std::string out = "v=" + std::to_string(d.v) + " w=" + std::to_string(d.w) + " colours=";
  for (Colour c = 0; c < kColours; ++c)
    if (d.colours >> c & 1u) out += static_cast<char>('0' + c);
  return out;
}

// Dipole-move sequences near the cluster: cancel an existing dipole, or insert
// one dipole touching the cluster, cancel a different one and then cancel a
// third. Every step is a dipole move, so the manifold is unchanged.
std::optional<ColouredGraph> dipole_sequence_reduction(const ColouredGraph& g, const std::vector<Vertex>& involved,
                                                       MoveTrace* trace) {
  auto direct = find_dipoles(g);
  if (!direct.empty()) {
    ColouredGraph out = cancel_dipole(g, direct.front());
    if (trace) trace->push_back({"cancel_dipole", dipole_string(direct.front()), g.order(), out.order()});
    return out;
  }
  std::vector<char> focus(g.order(), 0);
  for (Vertex v : involved) focus[v] = 1;
  for (unsigned colours : {0x3u, 0x5u, 0x9u, 0x6u, 0xAu, 0xCu, 0x7u, 0xBu, 0xDu, 0xEu, 0x1u, 0x2u, 0x4u, 0x8u}) {
    for (const auto& site : dipole_insertion_sites(g, colours)) {
      if (!touches(site, focus)) continue;
      ColouredGraph up = insert_dipole(g, site);
      const Vertex nv = g.order();
      for (const auto& d : find_dipoles(up)) {
        if (d.v == nv || d.w == nv) continue;
        ColouredGraph mid = cancel_dipole(up, d);
        auto last = find_dipoles(mid);
        if (last.empty()) continue;
        ColouredGraph out = cancel_dipole(mid, last.front());
        if (trace) {
          trace->push_back({"insert_dipole", site_string(site), g.order(), up.order()});
          trace->push_back({"cancel_dipole", dipole_string(d), up.order(), mid.order()});
          trace->push_back({"cancel_dipole", dipole_string(last.front()), mid.order(), out.order()});
        }
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ColouredGraph> eliminate_cluster_at(const ColouredGraph& g, const ClusterVertex& cv, MoveTrace* trace) {
  auto [p, q] = long_pairs(cv);
  if (complementary_pair(p) == q) {
    // The configuration is the 3x3 grid left by a (3,3) generalized dipole
    // cancellation, centred at v.
    for (int pr : {p, q}) {
      Colour i = kColourPairs[pr][0], j = kColourPairs[pr][1];
      int cp = complementary_pair(pr);
      Colour l = kColourPairs[cp][1];
      Vertex corner = g.neighbour(g.neighbour(cv.v, j), l);
      auto out = collapse_grid(g, corner, i, j, 3, 3);
      if (out && manifold_check(*out).is_gem) {
        if (trace)
          trace->push_back({"collapse_grid", "v=" + std::to_string(cv.v) + " type=" + pair_string(pr) + " 3x3",
                            g.order(), out->order()});
        return out;
      }
    }
  }
  return dipole_sequence_reduction(g, cv.involved, trace);
}

ColouredGraph eliminate_clusters(const ColouredGraph& input, MoveTrace* trace) {
  auto clusters = find_cluster_vertices(input);
  if (clusters.empty()) throw GemError(GemError::Kind::NoCluster, "graph has no cluster-type vertex");
  ColouredGraph g = input;
  while (!clusters.empty()) {
    std::optional<ColouredGraph> next;
    for (const auto& cv : clusters)
      if ((next = eliminate_cluster_at(g, cv, trace))) break;
    if (!next) throw GemError(GemError::Kind::InvalidConfiguration, "no order-reducing cluster elimination found");
    g = std::move(*next);
    clusters = find_cluster_vertices(g);
  }
  return g;
}

}  // namespace gem
