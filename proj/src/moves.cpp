#include "gemcat/moves.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <tuple>

namespace gem {

std::string format_trace(const MoveTrace& trace) {
  std::ostringstream out;
  for (const auto& t : trace)
    out << t.operation << ' ' << t.descriptor << ' ' << t.order_before << "->" << t.order_after << '\n';
  return out.str();
}

namespace {

unsigned joining_colours(const ColouredGraph& g, Vertex v, Vertex w) {
  unsigned mask = 0;
  for (Colour c = 0; c < kColours; ++c)
    if (g.neighbour(v, c) == w) mask |= 1u << c;
  return mask;
}

std::string mask_string(unsigned mask) {
  std::string s;
  for (Colour c = 0; c < kColours; ++c)
    if (mask >> c & 1u) s += static_cast<char>('0' + c);
  return s;
}

void log(MoveTrace* trace, std::string op, std::string desc, int before, int after) {
  if (trace) trace->push_back({std::move(op), std::move(desc), before, after});
}

}  // namespace

// ---------------------------------------------------------------- dipoles

bool is_proper_dipole(const ColouredGraph& g, Vertex v, Vertex w, unsigned colours) {
  int h = __builtin_popcount(colours);
  if (v == w || h < 1 || h > 3) return false;
  if (joining_colours(g, v, w) != colours) return false;
  auto comp = components(g, 0xFu & ~colours, nullptr);
  return comp[v] != comp[w];
}

std::vector<Dipole> find_dipoles(const ColouredGraph& g) {
  std::map<unsigned, std::vector<int>> comps;
  std::vector<Dipole> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = g.neighbour(v, c);
      if (w == kNoVertex || w < v) continue;
      unsigned mask = joining_colours(g, v, w);
      if (std::countr_zero(mask) != c) continue;  // visit each pair once
      if (mask == 0xFu) continue;
      unsigned rest = 0xFu & ~mask;
      auto it = comps.find(rest);
      if (it == comps.end()) it = comps.emplace(rest, components(g, rest, nullptr)).first;
      if (it->second[v] != it->second[w]) out.push_back({v, w, mask});
    }
  }
  std::sort(out.begin(), out.end(), [](const Dipole& a, const Dipole& b) {
    return std::tie(a.v, a.w) < std::tie(b.v, b.w);
  });
  return out;
}

ColouredGraph cancel_dipole(const ColouredGraph& g, const Dipole& d) {
  if (!is_proper_dipole(g, d.v, d.w, d.colours))
    throw GemError(GemError::Kind::NonProperDipole,
                   "(" + std::to_string(d.v) + "," + std::to_string(d.w) + ") is not a proper dipole");
  ColouredGraph work = g;
  for (Colour c = 0; c < kColours; ++c) {
    if (d.colours >> c & 1u) continue;
    Vertex x = work.neighbour(d.v, c);
    Vertex y = work.neighbour(d.w, c);
    work.unlink(d.v, c);
    work.unlink(d.w, c);
    work.link(x, y, c);
  }
  std::vector<bool> keep(g.order(), true);
  keep[d.v] = keep[d.w] = false;
  return work.induced(keep);
}

ColouredGraph insert_dipole(const ColouredGraph& g, const DipoleSite& site) {
  int h = __builtin_popcount(site.colours);
  if (h < 1 || h > 3) throw GemError(GemError::Kind::NonProperDipole, "dipole needs 1 to 3 colours");
  ColouredGraph out(g.order() + 2);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Colour c = 0; c < kColours; ++c)
      if (g.neighbour(v, c) != kNoVertex && g.neighbour(v, c) > v) out.link(v, g.neighbour(v, c), c);
  Vertex v = g.order(), w = g.order() + 1;
  for (Colour c = 0; c < kColours; ++c) {
    if (site.colours >> c & 1u) {
      out.link(v, w, c);
      continue;
    }
    Vertex a = site.tail[c], b = site.head[c];
    if (a == kNoVertex || b == kNoVertex || g.neighbour(a, c) != b)
      throw GemError(GemError::Kind::NonProperDipole, "site edge of colour " + std::to_string(c) + " missing");
    out.unlink(a, c);
    out.link(v, a, c);
    out.link(w, b, c);
  }
  if (!is_proper_dipole(out, v, w, site.colours))
    throw GemError(GemError::Kind::NonProperDipole, "inserted pair is not a proper dipole");
  return out;
}

std::vector<DipoleSite> dipole_insertion_sites(const ColouredGraph& g, unsigned colours) {
  std::vector<Colour> free;
  for (Colour c = 0; c < kColours; ++c)
    if (!(colours >> c & 1u)) free.push_back(c);
  std::vector<DipoleSite> out;
  if (free.empty() || free.size() == kColours) return out;

  // Oriented edges per free colour.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> edges(free.size());
  for (size_t k = 0; k < free.size(); ++k)
    for (Vertex v = 0; v < g.order(); ++v) {
      Vertex w = g.neighbour(v, free[k]);
      if (w != kNoVertex) edges[k].push_back({v, w});
    }

  int n_comp = 0;
  auto comp = components(g, 0xFu & ~colours, &n_comp);
  DipoleSite site;
  site.colours = colours;
  auto try_site = [&]() {
    try {
      insert_dipole(g, site);
      out.push_back(site);
    } catch (const GemError&) {
    }
  };
  std::vector<size_t> idx(free.size(), 0);
  // Odometer over one oriented edge per free colour; the first colour's edge
  // is taken with tail < head to skip the swapped duplicate.
  while (true) {
    bool ok = true;
    int c0 = -1;
    for (size_t k = 0; k < free.size() && ok; ++k) {
      auto [a, b] = edges[k][idx[k]];
      if (k == 0 && a > b) ok = false;
      if (c0 == -1) c0 = comp[a];
      if (comp[a] != c0) ok = false;
      site.tail[free[k]] = a;
      site.head[free[k]] = b;
    }
    if (ok) try_site();
    size_t k = 0;
    while (k < free.size() && ++idx[k] == edges[k].size()) idx[k++] = 0;
    if (k == free.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------- rho pairs

namespace {

std::vector<RhoPair> rho_pairs_on(const ColouredGraph& g, unsigned mask, bool stop_at_first) {
  auto census = cycle_census(g);
  std::vector<RhoPair> out;
  for (Colour c = 0; c < kColours; ++c) {
    if (!(mask >> c & 1u)) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
      Vertex w = g.neighbour(v, c);
      if (w != kNoVertex && v < w) edges.push_back({v, w});
    }
    std::vector<int> others;
    for (Colour j = 0; j < kColours; ++j)
      if (j != c && (mask >> j & 1u)) others.push_back(pair_index(c, j));
    for (size_t a = 0; a < edges.size(); ++a)
      for (size_t b = a + 1; b < edges.size(); ++b) {
        int shared = 0;
        for (int p : others) {
          int ca = census.cycle_of[p][edges[a].first];
          if (ca >= 0 && ca == census.cycle_of[p][edges[b].first]) ++shared;
        }
        if (shared >= 2) {
          out.push_back({c, edges[a], edges[b], shared});
          if (stop_at_first) return out;
        }
      }
  }
  return out;
}

}  // namespace

std::vector<RhoPair> find_rho_pairs(const ColouredGraph& g) { return rho_pairs_on(g, 0xFu, false); }

bool is_rigid(const ColouredGraph& g) { return rho_pairs_on(g, 0xFu, true).empty(); }

bool is_rigid_on(const ColouredGraph& g, unsigned colour_mask) {
  return rho_pairs_on(g, colour_mask, true).empty();
}

ColouredGraph switch_edges(const ColouredGraph& g, Colour c, Vertex a, Vertex b, Vertex x, Vertex y) {
  if (g.neighbour(a, c) != b || g.neighbour(x, c) != y || a == x || a == y)
    throw GemError(GemError::Kind::InvalidPair, "switch needs two distinct edges of one colour");
  ColouredGraph out = g;
  out.unlink(a, c);
  out.unlink(x, c);
  out.link(a, x, c);
  out.link(b, y, c);
  return out;
}

ColouredGraph switch_rho_pair(const ColouredGraph& g, const RhoPair& r) {
  const Colour c = r.colour;
  auto [a, b] = r.e;
  auto [x, y] = r.f;
  if (g.neighbour(a, c) != b || g.neighbour(x, c) != y || r.e == r.f)
    throw GemError(GemError::Kind::InvalidPair, "rho-pair edges not present");
  auto census = cycle_census(g);
  std::vector<int> shared;
  for (Colour j = 0; j < kColours; ++j) {
    if (j == c) continue;
    int p = pair_index(c, j);
    int ca = census.cycle_of[p][a];
    if (ca >= 0 && ca == census.cycle_of[p][x]) shared.push_back(p);
  }
  if (static_cast<int>(shared.size()) != r.multiplicity || shared.size() < 2)
    throw GemError(GemError::Kind::InvalidPair, "edges do not form a rho-pair of the stated multiplicity");

  // Walk the first shared cycle a -> b -> ... and find which end of f comes first.
  const int p0 = shared.front();
  const Colour other = kColourPairs[p0][0] == c ? kColourPairs[p0][1] : kColourPairs[p0][0];
  Vertex entry = kNoVertex;
  {
    Vertex v = b;
    Colour next = other;
    while (true) {
      if (v == x || v == y) {
        entry = v;
        break;
      }
      v = g.neighbour(v, next);
      next = next == c ? other : c;
    }
  }
  Vertex exit = entry == x ? y : x;

  auto splits_all = [&](const ColouredGraph& h) {
    auto after = cycle_census(h);
    for (int p : shared)
      if (after.count(p) != census.count(p) + 1) return false;
    return true;
  };
  // New edges (a, exit) and (b, entry) cut the walk into two cycles.
  ColouredGraph out = switch_edges(g, c, a, b, exit, entry);
  if (splits_all(out)) return out;
  out = switch_edges(g, c, a, b, entry, exit);
  if (splits_all(out)) return out;
  throw GemError(GemError::Kind::InvalidPair, "no pairing splits every shared cycle");
}

// ---------------------------------------------------------------- simplification

RigidForm simplify_to_rigid(const ColouredGraph& input, MoveTrace* trace) {
  RigidForm out{input, 0};
  ColouredGraph& g = out.graph;
  while (true) {
    auto dipoles = find_dipoles(g);
    if (!dipoles.empty()) {
      const Dipole& d = dipoles.front();
      int before = g.order();
      g = cancel_dipole(g, d);
      log(trace, "cancel_dipole",
          "v=" + std::to_string(d.v) + " w=" + std::to_string(d.w) + " colours=" + mask_string(d.colours), before,
          g.order());
      continue;
    }
    auto pairs = find_rho_pairs(g);
    if (pairs.empty()) break;
    auto it = std::find_if(pairs.begin(), pairs.end(), [](const RhoPair& r) { return r.multiplicity == 2; });
    const RhoPair& r = it != pairs.end() ? *it : pairs.front();
    g = switch_rho_pair(g, r);
    if (r.multiplicity == 3) ++out.handles;
    log(trace, r.multiplicity == 3 ? "switch_rho3" : "switch_rho2",
        "colour=" + std::to_string(r.colour) + " e=(" + std::to_string(r.e.first) + "," +
            std::to_string(r.e.second) + ") f=(" + std::to_string(r.f.first) + "," + std::to_string(r.f.second) +
            ")",
        g.order(), g.order());
    if (!is_connected(g)) throw GemError(GemError::Kind::NotAGem, "rho-pair switch disconnected the graph");
  }
  return out;
}

}  // namespace gem
