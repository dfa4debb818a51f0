#include <algorithm>
#include <tuple>

#include "gemcat/moves.hpp"

namespace gem {

namespace {

std::pair<Colour, Colour> complement(Colour i, Colour j) {
  int p = complementary_pair(pair_index(i, j));
  return {kColourPairs[p][0], kColourPairs[p][1]};
}

Cycle walk(const ColouredGraph& g, Vertex start, Colour first, Colour second) {
  Cycle out;
  Vertex v = start;
  Colour c = first;
  do {
    out.push_back(v);
    v = g.neighbour(v, c);
    c = c == first ? second : first;
  } while (v != start);
  return out;
}

// Colour of the edge between positions s and s+1 of a cycle that leaves its
// start along `first`.
Colour step_colour(int s, Colour first, Colour second) { return s % 2 == 0 ? first : second; }

}  // namespace

std::vector<GeneralizedDipole> find_generalized_dipoles(const ColouredGraph& g, Colour i, Colour j, int max_m,
                                                        int max_n) {
  if (i > j) std::swap(i, j);
  auto [k, l] = complement(i, j);
  std::vector<GeneralizedDipole> out;
  std::vector<char> mark(g.order(), 0);
  for (Vertex apex = 0; apex < g.order(); ++apex) {
    Cycle a = walk(g, apex, i, j);
    int m = static_cast<int>(a.size()) - 1;
    if (m > max_m) continue;
    Cycle b = walk(g, apex, k, l);
    int n = static_cast<int>(b.size()) - 1;
    if (n > max_n) continue;
    for (Vertex v : a) mark[v] = 1;
    bool meet = false;
    for (size_t t = 1; t < b.size(); ++t) meet = meet || mark[b[t]];
    for (Vertex v : a) mark[v] = 0;
    if (meet) continue;
    out.push_back({i, j, apex, std::move(a), std::move(b), m, n});
  }
  std::sort(out.begin(), out.end(), [](const GeneralizedDipole& x, const GeneralizedDipole& y) {
    return std::make_tuple(x.m * x.n, x.apex, x.m) < std::make_tuple(y.m * y.n, y.apex, y.m);
  });
  return out;
}

ColouredGraph cancel_generalized_dipole(const ColouredGraph& g, const GeneralizedDipole& gd) {
  const int m = gd.m, n = gd.n;
  Colour i = gd.i, j = gd.j;
  auto [k, l] = complement(i, j);
  if (m < 1 || n < 1 || static_cast<int>(gd.cycle_ij.size()) != m + 1 ||
      static_cast<int>(gd.cycle_kl.size()) != n + 1 || gd.cycle_ij.front() != gd.apex ||
      gd.cycle_kl.front() != gd.apex)
    throw GemError(GemError::Kind::InvalidConfiguration, "malformed generalized dipole");
  if (walk(g, gd.apex, i, j) != gd.cycle_ij || walk(g, gd.apex, k, l) != gd.cycle_kl)
    throw GemError(GemError::Kind::InvalidConfiguration, "cycles do not match the graph");

  const int old_n = g.order();
  std::vector<bool> keep(old_n, true);
  // Grid position for each (cross vertex, colour) half-edge that leaves the cross.
  std::vector<std::array<int, kColours>> port(old_n);
  for (auto& p : port) p.fill(-1);
  std::vector<int> in_cross(old_n, 0);
  for (Vertex v : gd.cycle_ij) in_cross[v] = 1;
  for (Vertex v : gd.cycle_kl) {
    if (in_cross[v] && v != gd.apex)
      throw GemError(GemError::Kind::InvalidConfiguration, "cycles meet outside the apex");
    in_cross[v] = 1;
  }
  for (Vertex v = 0; v < old_n; ++v) keep[v] = !in_cross[v];

  std::vector<Vertex> survivors;
  std::vector<Vertex> renumber(old_n, kNoVertex);
  for (Vertex v = 0; v < old_n; ++v)
    if (keep[v]) {
      renumber[v] = static_cast<Vertex>(survivors.size());
      survivors.push_back(v);
    }
  const int base = static_cast<int>(survivors.size());
  auto cell = [&](int s, int t) { return base + (s - 1) * n + (t - 1); };

  for (int t = 1; t <= n; ++t) {
    Vertex b = gd.cycle_kl[t];
    port[b][i] = cell(1, t);
    port[b][j] = cell(m, t);
  }
  for (int s = 1; s <= m; ++s) {
    Vertex a = gd.cycle_ij[s];
    port[a][k] = cell(s, 1);
    port[a][l] = cell(s, n);
  }

  ColouredGraph out(base + m * n);
  for (Vertex v = 0; v < old_n; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = g.neighbour(v, c);
      if (w < v) continue;
      Vertex x = in_cross[v] ? port[v][c] : renumber[v];
      Vertex y = in_cross[w] ? port[w][c] : renumber[w];
      if (x < 0 && y < 0) continue;  // edge of one of the two cycles
      if (x < 0 || y < 0) throw GemError(GemError::Kind::InvalidConfiguration, "dangling half-edge");
      out.link(x, y, c);
    }
  for (int s = 1; s <= m; ++s)
    for (int t = 1; t <= n; ++t) {
      if (s < m) out.link(cell(s, t), cell(s + 1, t), step_colour(s, i, j));
      if (t < n) out.link(cell(s, t), cell(s, t + 1), step_colour(t, k, l));
    }
  return out;
}

std::optional<ColouredGraph> collapse_grid(const ColouredGraph& g, Vertex corner, Colour i, Colour j, int m, int n) {
  if (i > j) std::swap(i, j);
  auto [k, l] = complement(i, j);
  if (m < 1 || n < 1 || m % 2 == 0 || n % 2 == 0 || !g.is_regular()) return std::nullopt;
  const int old_n = g.order();
  if (m * n > old_n) return std::nullopt;

  std::vector<std::vector<Vertex>> cell(m + 1, std::vector<Vertex>(n + 1, kNoVertex));
  cell[1][1] = corner;
  for (int s = 1; s < m; ++s) cell[s + 1][1] = g.neighbour(cell[s][1], step_colour(s, i, j));
  for (int s = 1; s <= m; ++s)
    for (int t = 1; t < n; ++t) cell[s][t + 1] = g.neighbour(cell[s][t], step_colour(t, k, l));

  std::vector<int> row(old_n, 0), col(old_n, 0);
  for (int s = 1; s <= m; ++s)
    for (int t = 1; t <= n; ++t) {
      Vertex v = cell[s][t];
      if (row[v]) return std::nullopt;
      row[v] = s;
      col[v] = t;
    }
  for (int s = 1; s < m; ++s)
    for (int t = 1; t <= n; ++t)
      if (g.neighbour(cell[s][t], step_colour(s, i, j)) != cell[s + 1][t]) return std::nullopt;

  auto internal = [&](Vertex v, Colour c) {
    int s = row[v], t = col[v];
    if (c == i || c == j) {
      if (s > 1 && step_colour(s - 1, i, j) == c) return true;
      if (s < m && step_colour(s, i, j) == c) return true;
    } else {
      if (t > 1 && step_colour(t - 1, k, l) == c) return true;
      if (t < n && step_colour(t, k, l) == c) return true;
    }
    return false;
  };

  // New layout: survivors, then apex, a_1..a_m, b_1..b_n.
  std::vector<Vertex> renumber(old_n, kNoVertex);
  int next = 0;
  for (Vertex v = 0; v < old_n; ++v)
    if (!row[v]) renumber[v] = next++;
  const Vertex apex = next;
  auto a_of = [&](int s) { return apex + s; };
  auto b_of = [&](int t) { return apex + m + t; };
  ColouredGraph out(next + m + n + 1);

  auto cross = [&](Vertex v, Colour c) -> Vertex {
    int s = row[v], t = col[v];
    if (c == i && s == 1) return b_of(t);
    if (c == j && s == m) return b_of(t);
    if (c == k && t == 1) return a_of(s);
    if (c == l && t == n) return a_of(s);
    return kNoVertex;
  };

  for (Vertex v = 0; v < old_n; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      Vertex w = g.neighbour(v, c);
      if (w < v) continue;
      if (row[v] && internal(v, c)) continue;
      if (row[w] && internal(w, c)) return std::nullopt;
      Vertex x = row[v] ? cross(v, c) : renumber[v];
      Vertex y = row[w] ? cross(w, c) : renumber[w];
      if (x == kNoVertex || y == kNoVertex || x == y) return std::nullopt;
      if (out.neighbour(x, c) != kNoVertex || out.neighbour(y, c) != kNoVertex) return std::nullopt;
      out.link(x, y, c);
    }
  for (int s = 0; s <= m; ++s) out.link(s == 0 ? apex : a_of(s), s == m ? apex : a_of(s + 1), step_colour(s, i, j));
  for (int t = 0; t <= n; ++t) out.link(t == 0 ? apex : b_of(t), t == n ? apex : b_of(t + 1), step_colour(t, k, l));
  if (!out.is_regular()) return std::nullopt;
  return out;
}

}  // namespace gem
