#include "gemcat/generator.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "gemcat/census.hpp"
#include "gemcat/moves.hpp"

namespace gem {

namespace {

// Open paths and closed cycles of a colour pair {a, k} where colour k may be
// partial. Every vertex lies on exactly one of them.
struct PairStructure {
  std::vector<int> id;          // per vertex
  std::vector<char> closed;     // per id
  std::vector<Vertex> partner;  // per vertex missing k: the other end of its path
  int closed_count = 0;
};

PairStructure pair_structure(const ColouredGraph& g, Colour a, Colour k) {
  const int n = g.order();
  PairStructure s;
  s.id.assign(n, -1);
  s.partner.assign(n, kNoVertex);
  for (Vertex x = 0; x < n; ++x) {
    if (s.id[x] != -1 || g.neighbour(x, k) != kNoVertex) continue;
    int id = static_cast<int>(s.closed.size());
    s.closed.push_back(0);
    Vertex v = x;
    Colour c = a;
    while (true) {
      s.id[v] = id;
      Vertex w = g.neighbour(v, c);
      if (w == kNoVertex) break;
      v = w;
      c = c == a ? k : a;
    }
    s.partner[x] = v;
    s.partner[v] = x;
  }
  for (Vertex x = 0; x < n; ++x) {
    if (s.id[x] != -1) continue;
    int id = static_cast<int>(s.closed.size());
    s.closed.push_back(1);
    ++s.closed_count;
    Vertex v = x;
    Colour c = a;
    do {
      s.id[v] = id;
      v = g.neighbour(v, c);
      c = c == a ? k : a;
    } while (v != x);
  }
  return s;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct ResidueShape {
  int components = 0;
  int open_components = 0;
  bool genus_ok = true;
  int closed_faces = 0;  // all closed cycles of the residue's three pairs
};

// Residue on colours {a, b, k}; k is the partial colour, {a,b}-cycles are closed.
ResidueShape residue_shape(const ColouredGraph& g, Colour a, Colour b, Colour k, const PairStructure& ak,
                           const PairStructure& bk, int ab_cycles, const std::vector<int>& ab_id) {
  const int n = g.order();
  UnionFind uf(n);
  for (Vertex v = 0; v < n; ++v)
    for (Colour c : {a, b, k}) {
      Vertex w = g.neighbour(v, c);
      if (w != kNoVertex && v < w) uf.unite(v, w);
    }
  std::vector<int> root_index(n, -1);
  std::vector<int> faces, k_edges, ports, boundary;
  ResidueShape out;
  auto index_of = [&](Vertex v) {
    int r = uf.find(v);
    if (root_index[r] == -1) {
      root_index[r] = static_cast<int>(faces.size());
      faces.push_back(0);
      k_edges.push_back(0);
      ports.push_back(0);
      boundary.push_back(0);
    }
    return root_index[r];
  };
  std::vector<char> seen_ab(ab_cycles, 0), seen_ak(ak.closed.size(), 0), seen_bk(bk.closed.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    int c = index_of(v);
    if (!seen_ab[ab_id[v]]) {
      seen_ab[ab_id[v]] = 1;
      ++faces[c];
    }
    if (ak.closed[ak.id[v]] && !seen_ak[ak.id[v]]) {
      seen_ak[ak.id[v]] = 1;
      ++faces[c];
    }
    if (bk.closed[bk.id[v]] && !seen_bk[bk.id[v]]) {
      seen_bk[bk.id[v]] = 1;
      ++faces[c];
    }
    Vertex w = g.neighbour(v, k);
    if (w == kNoVertex) ++ports[c];
    else if (v < w) ++k_edges[c];
  }
  // Boundary circles: ports joined alternately by open {a,k} and {b,k} paths.
  std::vector<char> visited(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    if (g.neighbour(x, k) != kNoVertex || visited[x]) continue;
    ++boundary[index_of(x)];
    Vertex v = x;
    while (!visited[v]) {
      visited[v] = 1;
      Vertex u = ak.partner[v];
      visited[u] = 1;
      v = bk.partner[u];
    }
  }
  out.components = static_cast<int>(faces.size());
  for (int c = 0; c < out.components; ++c) {
    out.closed_faces += faces[c];
    if (ports[c]) ++out.open_components;
    if (faces[c] - k_edges[c] + boundary[c] != 2) out.genus_ok = false;
  }
  return out;
}

struct StaticPair {
  Colour a, b;
  std::vector<int> id;
  int count = 0;
};

StaticPair static_pair(const ColouredGraph& g, Colour a, Colour b) {
  StaticPair s{a, b, {}, 0};
  s.count = static_cast<int>(bicoloured_cycles(g, a, b, &s.id).size());
  return s;
}

class MatchingSearch {
 public:
  struct Config {
    std::vector<Colour> base;  // fully present colours
    Colour k;                  // colour being added
    bool surface_symmetry = false;
    int max_closed_k_cycles = -1;  // bound on closed {a,k}-cycles per a, or -1
    CompletionOptions options;
    bool allow_multi = false;
  };

  MatchingSearch(ColouredGraph start, Config cfg, std::function<void(const ColouredGraph&)> emit)
      : g_(std::move(start)), cfg_(std::move(cfg)), emit_(std::move(emit)) {
    for (size_t x = 0; x < cfg_.base.size(); ++x)
      for (size_t y = x + 1; y < cfg_.base.size(); ++y) statics_.push_back(static_pair(g_, cfg_.base[x], cfg_.base[y]));
    if (cfg_.surface_symmetry) {
      const auto& cyc = statics_.front();
      cycle_len_.assign(cyc.count, 0);
      cycle_first_.assign(cyc.count, g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) {
        ++cycle_len_[cyc.id[v]];
        cycle_first_[cyc.id[v]] = std::min(cycle_first_[cyc.id[v]], v);
      }
      touched_.assign(cyc.count, 0);
    }
  }

  void run() { recurse(0); }

 private:
  const StaticPair& static_for(Colour x, Colour y) const {
    for (const auto& s : statics_)
      if ((s.a == x && s.b == y) || (s.a == y && s.b == x)) return s;
    throw GemError(GemError::Kind::InvalidConfiguration, "missing static pair");
  }

  bool same_static_cycle(Vertex v, Vertex w) const {
    for (const auto& s : statics_)
      if (s.id[v] == s.id[w]) return true;
    return false;
  }

  // Untouched {0,1}-cycles of one length are interchangeable and each is
  // vertex-transitive, so only the first vertex of the first one is tried.
  bool symmetric_skip(Vertex v, Vertex w) const {
    if (!cfg_.surface_symmetry) return false;
    const auto& cyc = statics_.front();
    int c = cyc.id[w];
    if (touched_[c]) return false;
    if (w != cycle_first_[c]) return true;
    for (int d = 0; d < c; ++d)
      if (!touched_[d] && d != cyc.id[v] && cycle_len_[d] == cycle_len_[c]) return true;
    return false;
  }

  void set_touched(Vertex v, int delta) {
    if (cfg_.surface_symmetry) touched_[statics_.front().id[v]] += delta;
  }

  // Checks for rho-pairs on the cycles closed by the edge (v, w).
  bool rigid_after(Vertex v, const std::vector<PairStructure>& st) const {
    const Colour k = cfg_.k;
    std::vector<Vertex> cyc;
    for (size_t ai = 0; ai < cfg_.base.size(); ++ai) {
      const Colour a = cfg_.base[ai];
      const auto& s = st[ai];
      if (!s.closed[s.id[v]]) continue;
      cyc.clear();
      Vertex x = v;
      Colour c = a;
      do {
        cyc.push_back(x);
        x = g_.neighbour(x, c);
        c = c == a ? k : a;
      } while (x != v);
      // cyc[0]-cyc[1] is an a-edge, cyc[1]-cyc[2] a k-edge, and so on.
      for (size_t xi = 0; xi < cfg_.base.size(); ++xi) {
        if (xi == ai) continue;
        const Colour other = cfg_.base[xi];
        const auto& stat = static_for(a, other);
        const auto& dyn = st[xi];
        for (size_t e = 0; e < cyc.size(); e += 2)
          for (size_t f = e + 2; f < cyc.size(); f += 2) {
            if (stat.id[cyc[e]] == stat.id[cyc[f]]) return false;
            Vertex ke = cyc[e + 1], kf = cyc[f + 1];
            if (dyn.id[ke] == dyn.id[kf] && dyn.closed[dyn.id[ke]]) return false;
          }
      }
    }
    return true;
  }

  bool prune(Vertex v, int m) {
    std::vector<PairStructure> st;
    st.reserve(cfg_.base.size());
    for (Colour a : cfg_.base) st.push_back(pair_structure(g_, a, cfg_.k));
    if (cfg_.max_closed_k_cycles >= 0)
      for (const auto& s : st)
        if (s.closed_count > cfg_.max_closed_k_cycles) return true;
    if (v != kNoVertex && cfg_.options.rigidity_pruning && !rigid_after(v, st)) return true;

    const bool complete = 2 * m == g_.order();
    const auto rule = cfg_.options.planarity;
    for (size_t x = 0; x < cfg_.base.size(); ++x)
      for (size_t y = x + 1; y < cfg_.base.size(); ++y) {
        if (!complete && rule == PlanarityRule::None && !cfg_.options.connectivity_pruning) continue;
        const auto& stat = static_for(cfg_.base[x], cfg_.base[y]);
        auto shape =
            residue_shape(g_, cfg_.base[x], cfg_.base[y], cfg_.k, st[x], st[y], stat.count, stat.id);
        if (complete) {
          if (shape.components != 1 || !shape.genus_ok) return true;
          continue;
        }
        if (cfg_.options.connectivity_pruning && shape.open_components < shape.components &&
            shape.components > 1)
          return true;
        if (rule == PlanarityRule::Genus && !shape.genus_ok) return true;
        if (rule == PlanarityRule::Formula) {
          int closed = shape.components - shape.open_components;
          if (2 * closed + shape.open_components != shape.closed_faces - m) return true;
        }
      }
    return false;
  }

  void recurse(int m) {
    Vertex v = kNoVertex;
    for (Vertex x = 0; x < g_.order(); ++x)
      if (g_.neighbour(x, cfg_.k) == kNoVertex) {
        v = x;
        break;
      }
    if (v == kNoVertex) {
      emit_(g_);
      return;
    }
    for (Vertex w = v + 1; w < g_.order(); ++w) {
      if (g_.neighbour(w, cfg_.k) != kNoVertex) continue;
      if (!cfg_.allow_multi) {
        bool multi = false;
        for (Colour c : cfg_.base) multi = multi || g_.neighbour(v, c) == w;
        if (multi) continue;
      }
      if (cfg_.options.same_cycle_rule && same_static_cycle(v, w)) continue;
      if (symmetric_skip(v, w)) continue;
      g_.link(v, w, cfg_.k);
      set_touched(v, 1);
      set_touched(w, 1);
      if (!prune(v, m + 1)) recurse(m + 1);
      set_touched(v, -1);
      set_touched(w, -1);
      g_.unlink(v, cfg_.k);
    }
  }

  ColouredGraph g_;
  Config cfg_;
  std::function<void(const ColouredGraph&)> emit_;
  std::vector<StaticPair> statics_;
  std::vector<int> cycle_len_, cycle_first_, touched_;
};

ColouredGraph triple_edge() {
  ColouredGraph g(2);
  for (Colour c = 0; c < 3; ++c) g.link(0, 1, c);
  return g;
}

void partitions(int remaining, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = min_part; part <= remaining; part += 2) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SurfaceGraph> generate_surface_catalogue(int p) {
  if (p < 1) throw GemError(GemError::Kind::InvalidConfiguration, "p must be positive");
  if (p == 1) {
    auto cf = canonical_code(triple_edge(), 3);
    return {{cf.graph, cf.code}};
  }
  std::set<Code> codes;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(2 * p, 4, cur, parts);
  for (const auto& part : parts) {
    const int cycles = static_cast<int>(part.size());
    // Colours are arranged so that {0,1} has the most cycles.
    if (3 * cycles < p + 2) continue;
    ColouredGraph g(2 * p);
    int start = 0;
    for (int len : part) {
      for (int t = 0; t < len; t += 2) {
        g.link(start + t, start + t + 1, 0);
        g.link(start + t + 1, start + (t + 2) % len, 1);
      }
      start += len;
    }
    MatchingSearch::Config cfg;
    cfg.base = {0, 1};
    cfg.k = 2;
    cfg.surface_symmetry = true;
    cfg.max_closed_k_cycles = cycles;
    MatchingSearch search(std::move(g), cfg, [&](const ColouredGraph& h) {
      if (!is_sphere_gem(h, {0, 1, 2}) || !is_rigid_on(h, 0x7)) return;
      codes.insert(canonical_code_only(h, 3));
    });
    search.run();
  }
  std::vector<SurfaceGraph> out;
  for (const auto& c : codes) out.push_back({decode(c), c});
  return out;
}

int planarity_defect(const ColouredGraph& g, Colour r) {
  Colour a = -1, b = -1;
  for (Colour c = 0; c < 3; ++c)
    if (c != r) (a < 0 ? a : b) = c;
  auto ak = pair_structure(g, a, 3);
  auto bk = pair_structure(g, b, 3);
  auto ab = static_pair(g, a, b);
  if (ab.id.end() != std::find(ab.id.begin(), ab.id.end(), -1))
    throw GemError(GemError::Kind::IncompleteColouring, "colours 0,1,2 must be complete");
  auto shape = residue_shape(g, a, b, 3, ak, bk, ab.count, ab.id);
  int m = g.edge_count(3);
  int closed = shape.components - shape.open_components;
  return 2 * closed + shape.open_components - (shape.closed_faces - m);
}

std::vector<Code> complete_surface(const ColouredGraph& surface, const CompletionOptions& options) {
  if (!surface.is_regular(0x7) || surface.has_colour(3))
    throw GemError(GemError::Kind::InvalidConfiguration, "surface graph must be 3-regular on colours 0,1,2");
  std::set<Code> codes;
  auto accept = [&](const ColouredGraph& h) {
    if (!is_crystallization(h)) return;
    if (options.require_rigid && !is_rigid(h)) return;
    codes.insert(canonical_code_only(h));
  };
  if (surface.order() == 2) {
    ColouredGraph g = surface;
    g.link(0, 1, 3);
    accept(g);
    return {codes.begin(), codes.end()};
  }
  MatchingSearch::Config cfg;
  cfg.base = {0, 1, 2};
  cfg.k = 3;
  cfg.options = options;
  // A colour-3 edge parallel to another edge makes a rho_2-pair.
  cfg.allow_multi = !options.rigidity_pruning;
  MatchingSearch search(surface, cfg, accept);
  search.run();
  return {codes.begin(), codes.end()};
}

Catalogue clusterless_filter(const Catalogue& c) {
  Catalogue out = c;
  out.clusterless = true;
  out.codes.clear();
  for (const auto& code : c.codes)
    if (find_cluster_vertices(decode(code)).empty()) out.codes.push_back(code);
  return out;
}

CatalogueSet build_catalogue(int p, const BuildOptions& options) {
  CatalogueSet out;
  out.surfaces = generate_surface_catalogue(p);
  std::set<Code> all;
  std::mutex mutex;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next++;
      if (i >= out.surfaces.size()) return;
      auto codes = complete_surface(out.surfaces[i].graph, options.completion);
      std::lock_guard lock(mutex);
      all.insert(codes.begin(), codes.end());
    }
  };
  int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  out.bipartite.p = out.nonbipartite.p = p;
  out.bipartite.bipartite = true;
  out.nonbipartite.bipartite = false;
  for (const auto& code : all) (is_bipartite(decode(code)) ? out.bipartite : out.nonbipartite).codes.push_back(code);
  if (options.clusterless) {
    out.bipartite = clusterless_filter(out.bipartite);
    out.nonbipartite = clusterless_filter(out.nonbipartite);
  }
  return out;
}

}  // namespace gem
