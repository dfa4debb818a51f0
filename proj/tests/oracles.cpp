#include <array>
#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gemcat/census.hpp"
#include "gemcat/moves.hpp"

using gem::BigInt;
using gem::Colour;
using gem::ColouredGraph;
using gem::Vertex;

namespace oracle {

namespace {

using Matching = std::vector<std::pair<Vertex, Vertex>>;

void all_matchings(std::vector<Vertex>& free, Matching& cur, std::vector<Matching>& out) {
  if (free.empty()) {
    out.push_back(cur);
    return;
  }
  Vertex v = free.front();
  for (size_t k = 1; k < free.size(); ++k) {
    Vertex w = free[k];
    std::vector<Vertex> rest;
    for (size_t t = 1; t < free.size(); ++t)
      if (t != k) rest.push_back(free[t]);
    cur.push_back({v, w});
    all_matchings(rest, cur, out);
    cur.pop_back();
  }
}

std::vector<Matching> matchings(int n) {
  std::vector<Vertex> free(n);
  std::iota(free.begin(), free.end(), 0);
  Matching cur;
  std::vector<Matching> out;
  all_matchings(free, cur, out);
  return out;
}

// Cycle index of every vertex in the {i,j}-subgraph, by plain walking.
std::vector<int> cycle_ids(const ColouredGraph& g, Colour i, Colour j, int* count) {
  std::vector<int> id(g.order(), -1);
  *count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (id[s] != -1) continue;
    Vertex v = s;
    Colour c = i;
    do {
      id[v] = *count;
      v = g.neighbour(v, c);
      c = c == i ? j : i;
    } while (v != s || c != i);
    ++*count;
  }
  return id;
}

bool rigid3(const ColouredGraph& g) {
  for (Colour c = 0; c < 3; ++c) {
    std::vector<std::vector<int>> ids;
    for (Colour d = 0; d < 3; ++d) {
      if (d == c) continue;
      int n;
      ids.push_back(cycle_ids(g, std::min(c, d), std::max(c, d), &n));
    }
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex x = 0; x < g.order(); ++x) {
        Vertex w = g.neighbour(v, c), y = g.neighbour(x, c);
        if (!(v < w && x < y && v < x)) continue;
        int shared = 0;
        for (const auto& id : ids) shared += id[v] == id[x];
        if (shared >= 2) return false;
      }
  }
  return true;
}

bool connected3(const ColouredGraph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < 3; ++c) {
      Vertex w = g.neighbour(v, c);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

using Big = std::vector<std::vector<BigInt>>;

// Row echelon form by Euclidean remainder steps: the smallest entry in the
// pivot column is swapped up and subtracted from the rows below until they
// vanish.
void echelon(Big& a) {
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      size_t p = rows;
      for (size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (p == rows || abs(a[i][c]) < abs(a[p][c]))) p = i;
      if (p == rows) break;
      std::swap(a[r], a[p]);
      bool clear = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        BigInt q = a[i][c] / a[r][c];
        for (size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
        if (a[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (a[r][c] != 0) ++r;
  }
}

Big transpose(const Big& a) {
  if (a.empty()) return {};
  Big t(a[0].size(), std::vector<BigInt>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool monomial(const Big& a) {
  if (a.empty()) return true;
  std::vector<int> col(a[0].size(), 0);
  for (const auto& row : a) {
    int in_row = 0;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        ++in_row;
        ++col[j];
      }
    if (in_row > 1) return false;
  }
  return std::all_of(col.begin(), col.end(), [](int c) { return c <= 1; });
}

}  // namespace

std::set<gem::Code> surfaces(int p) {
  const int n = 2 * p;
  std::set<gem::Code> out;
  auto ms = matchings(n);
  for (const auto& m1 : ms)
    for (const auto& m2 : ms) {
      ColouredGraph g(n);
      for (Vertex v = 0; v < n; v += 2) g.link(v, v + 1, 0);
      for (auto [a, b] : m1) g.link(a, b, 1);
      for (auto [a, b] : m2) g.link(a, b, 2);
      if (!connected3(g)) continue;
      int total = 0, k;
      for (auto [i, j] : {std::pair<Colour, Colour>{0, 1}, {0, 2}, {1, 2}}) {
        cycle_ids(g, i, j, &k);
        total += k;
      }
      if (total != p + 2 || !rigid3(g)) continue;
      out.insert(gem::canonical_code_only(g, 3));
    }
  return out;
}

std::set<gem::Code> completions(const ColouredGraph& surface, bool rigid) {
  std::set<gem::Code> out;
  for (const auto& m : matchings(surface.order())) {
    ColouredGraph g = surface;
    for (auto [a, b] : m) g.link(a, b, 3);
    if (!gem::is_crystallization(g)) continue;
    if (rigid && !gem::is_rigid(g)) continue;
    out.insert(gem::canonical_code_only(g));
  }
  return out;
}

std::vector<BigInt> invariant_factors(const gem::IntMatrix& m) {
  Big a(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (int x : m[i]) a[i].push_back(x);
  while (!monomial(a)) {
    echelon(a);
    a = transpose(a);
  }
  std::vector<BigInt> d;
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) d.push_back(abs(x));
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

gem::HomologyGroup first_homology(const ColouredGraph& g) {
  const int n = g.order();
  std::vector<int> parent;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto pair_of = [](Colour s, Colour t) { return gem::pair_index(s, t); };

  // Labelled cells: vertices (v,s), edges (v,{s,t}), triangles (v,c).
  const int nv = 4 * n, ne = 6 * n;
  parent.resize(nv + ne);
  std::iota(parent.begin(), parent.end(), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Colour c = 0; c < 4; ++c) {
      Vertex w = g.neighbour(v, c);
      for (Colour s = 0; s < 4; ++s)
        if (s != c) unite(4 * v + s, 4 * w + s);
      for (Colour s = 0; s < 4; ++s)
        for (Colour t = s + 1; t < 4; ++t)
          if (s != c && t != c) unite(nv + 6 * v + pair_of(s, t), nv + 6 * w + pair_of(s, t));
    }

  std::map<int, int> vid, eid;
  for (int x = 0; x < nv; ++x) vid.emplace(find(x), static_cast<int>(vid.size()));
  for (int x = nv; x < nv + ne; ++x) eid.emplace(find(x), static_cast<int>(eid.size()));
  struct KEdge {
    int from, to;
  };
  std::vector<KEdge> edges(eid.size());
  for (Vertex v = 0; v < n; ++v)
    for (Colour s = 0; s < 4; ++s)
      for (Colour t = s + 1; t < 4; ++t)
        edges[eid[find(nv + 6 * v + pair_of(s, t))]] = {vid[find(4 * v + s)], vid[find(4 * v + t)]};

  // Spanning forest of the 1-skeleton.
  std::vector<char> in_tree(edges.size(), 0), reached(vid.size(), 0);
  for (size_t root = 0; root < vid.size(); ++root) {
    if (reached[root]) continue;
    reached[root] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t e = 0; e < edges.size(); ++e) {
        bool a = reached[edges[e].from], b = reached[edges[e].to];
        if (a != b) {
          reached[edges[e].from] = reached[edges[e].to] = 1;
          in_tree[e] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<int> gen(edges.size(), -1);
  int gens = 0;
  for (size_t e = 0; e < edges.size(); ++e)
    if (!in_tree[e]) gen[e] = gens++;

  gem::IntMatrix rel;
  std::set<int> seen_tri;
  for (Vertex v = 0; v < n; ++v)
    for (Colour c = 0; c < 4; ++c) {
      Vertex w = g.neighbour(v, c);
      int key = std::min(v, w) * 4 + c;
      if (!seen_tri.insert(key).second) continue;
      std::vector<Colour> lab;
      for (Colour x = 0; x < 4; ++x)
        if (x != c) lab.push_back(x);
      std::vector<int> row(gens, 0);
      auto add = [&](Colour s, Colour t, int sign) {
        int e = eid[find(nv + 6 * v + pair_of(s, t))];
        if (gen[e] >= 0) row[gen[e]] += sign;
      };
      add(lab[1], lab[2], 1);
      add(lab[0], lab[2], -1);
      add(lab[0], lab[1], 1);
      rel.push_back(row);
    }
  gem::HomologyGroup h;
  std::vector<BigInt> f = gens == 0 ? std::vector<BigInt>{} : invariant_factors(rel);
  h.rank = gens - static_cast<int>(f.size());
  for (const auto& x : f)
    if (x > 1) h.torsion.push_back(x);
  return h;
}

std::vector<Vertex> cluster_vertices(const ColouredGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::set<Vertex>> short_cycles;
    for (Colour i = 0; i < 4; ++i)
      for (Colour j = i + 1; j < 4; ++j) {
        Vertex a = g.neighbour(v, i), b = g.neighbour(a, j), c = g.neighbour(b, i);
        if (g.neighbour(c, j) != v) continue;
        std::set<Vertex> s{v, a, b, c};
        if (s.size() == 4) short_cycles.push_back(s);
      }
    const size_t k = short_cycles.size();
    bool hit = false;
    for (size_t a = 0; a < k && !hit; ++a)
      for (size_t b = a + 1; b < k && !hit; ++b)
        for (size_t c = b + 1; c < k && !hit; ++c)
          for (size_t d = c + 1; d < k && !hit; ++d) {
            std::set<Vertex> u;
            for (size_t x : {a, b, c, d}) u.insert(short_cycles[x].begin(), short_cycles[x].end());
            hit = u.size() == 9;
          }
    if (hit) out.push_back(v);
  }
  return out;
}

ColouredGraph scramble(const ColouredGraph& g, std::mt19937& rng) {
  std::vector<Vertex> relabel(g.order());
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::array<Colour, gem::kColours> perm{0, 1, 2, 3};
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabelled(relabel).recoloured(perm);
}

ColouredGraph handle_gem() {
  // Bipartite crystallization of S2xS1 found by exhaustive search at order 8;
  // every colour carries a rho_3-pair whose switch keeps it connected.
  static const std::array<std::array<Vertex, 8>, 4> adj{{{1, 0, 3, 2, 5, 4, 7, 6},
                                                         {1, 0, 4, 6, 2, 7, 3, 5},
                                                         {2, 3, 0, 1, 6, 7, 4, 5},
                                                         {5, 7, 3, 2, 6, 0, 4, 1}}};
  ColouredGraph g(8);
  for (Colour c = 0; c < 4; ++c)
    for (Vertex v = 0; v < 8; ++v)
      if (v < adj[c][v]) g.link(v, adj[c][v], c);
  return g;
}

}  // namespace oracle

namespace fixture {

const gem::CatalogueSet& catalogue(int p) {
  static std::map<int, gem::CatalogueSet> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, gem::build_catalogue(p)).first;
  return it->second;
}

std::vector<gem::Code> members(int max_p) {
  std::vector<gem::Code> out;
  for (int p = 1; p <= max_p; ++p) {
    const auto& set = catalogue(p);
    out.insert(out.end(), set.bipartite.codes.begin(), set.bipartite.codes.end());
    out.insert(out.end(), set.nonbipartite.codes.begin(), set.nonbipartite.codes.end());
  }
  return out;
}

}  // namespace fixture
