#include "gemcat/homology.hpp"

#include <algorithm>
#include <map>

#include "gemcat/census.hpp"

namespace gem {

ChainComplex chain_complex(const ColouredGraph& g) {
  if (g.order() == 0 || !g.is_regular())
    throw GemError(GemError::Kind::NotAGem, "chain complex needs a closed 4-coloured graph");
  const int n = g.order();
  ChainComplex cx;

  // 0-cells: the K-vertex labelled s in the simplex of v is the component of
  // the residue without colour s that contains v.
  std::array<std::vector<int>, kColours> zero_id;
  int zero = 0;
  for (Colour s = 0; s < kColours; ++s) {
    int count = 0;
    zero_id[s] = components(g, mask_without(s), &count);
    for (auto& x : zero_id[s]) x += zero;
    zero += count;
  }

  // 1-cells: the K-edge {s,t} in the simplex of v is the cycle through v of
  // the complementary pair.
  std::array<std::vector<int>, 6> one_id;
  int one = 0;
  for (int p = 0; p < 6; ++p) {
    auto cycles = bicoloured_cycles(g, kColourPairs[p][0], kColourPairs[p][1], &one_id[p]);
    for (auto& x : one_id[p]) x += one;
    one += static_cast<int>(cycles.size());
  }

  // 2-cells: edges, numbered colour by colour.
  std::vector<std::array<int, kColours>> two_id(n);
  int two = 0;
  for (Colour c = 0; c < kColours; ++c)
    for (Vertex v = 0; v < n; ++v) {
      Vertex w = g.neighbour(v, c);
      if (v < w) two_id[v][c] = two_id[w][c] = two++;
    }

  cx.cells = {zero, one, two, n};
  cx.boundary[1].assign(zero, std::vector<int>(one, 0));
  cx.boundary[2].assign(one, std::vector<int>(two, 0));
  cx.boundary[3].assign(two, std::vector<int>(n, 0));

  auto edge_cell = [&](Vertex v, Colour s, Colour t) {
    return one_id[complementary_pair(pair_index(s, t))][v];
  };

  std::vector<char> done_one(one, 0), done_two(two, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Colour c = 0; c < kColours; ++c) {
      cx.boundary[3][two_id[v][c]][v] += (c % 2 == 0) ? 1 : -1;
      int tri = two_id[v][c];
      if (done_two[tri]) continue;
      done_two[tri] = 1;
      std::array<Colour, 3> lab{};
      int k = 0;
      for (Colour x = 0; x < kColours; ++x)
        if (x != c) lab[k++] = x;
      // [a,b,d] -> [b,d] - [a,d] + [a,b]
      cx.boundary[2][edge_cell(v, lab[1], lab[2])][tri] += 1;
      cx.boundary[2][edge_cell(v, lab[0], lab[2])][tri] -= 1;
      cx.boundary[2][edge_cell(v, lab[0], lab[1])][tri] += 1;
    }
    for (Colour s = 0; s < kColours; ++s)
      for (Colour t = s + 1; t < kColours; ++t) {
        int e = edge_cell(v, s, t);
        if (done_one[e]) continue;
        done_one[e] = 1;
        cx.boundary[1][zero_id[t][v]][e] += 1;
        cx.boundary[1][zero_id[s][v]][e] -= 1;
      }
  }
  return cx;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row Hermite form. Euclidean steps bring the smallest entry of each pivot
// column up; rows above a pivot are then reduced modulo it, which keeps the
// entries from growing.
void hermite(BigMatrix& a) {
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
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (size_t k = c; k < cols; ++k) a[r][k] = -a[r][k];
    for (size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      BigInt q = floor_div(a[i][c], a[r][c]);
      if (q != 0)
        for (size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
    }
    ++r;
  }
}

bool diagonal(const BigMatrix& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (i != j && a[i][j] != 0) return false;
  return true;
}

BigMatrix transposed(const BigMatrix& a) {
  if (a.empty()) return {};
  BigMatrix t(a[0].size(), std::vector<BigInt>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

std::vector<BigInt> invariant_factors(const IntMatrix& input) {
  const size_t rows = input.size();
  const size_t cols = rows ? input[0].size() : 0;
  BigMatrix a(rows, std::vector<BigInt>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = input[i][j];

  // Hermite forms of the matrix and its transpose alternate until only the
  // diagonal is left; each round shrinks the off-diagonal part.
  while (!diagonal(a)) {
    hermite(a);
    if (diagonal(a)) break;
    a = transposed(a);
  }
  std::vector<BigInt> diag;
  for (size_t i = 0; i < a.size() && i < (a.empty() ? 0 : a[0].size()); ++i)
    if (a[i][i] != 0) diag.push_back(abs(a[i][i]));
  // Divisibility chain by gcd/lcm exchanges.
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::string HomologyGroup::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (rank == 1) add("Z");
  else if (rank > 1) add("Z^" + std::to_string(rank));
  for (const auto& t : torsion) add("Z" + t.str());
  return out.empty() ? "0" : out;
}

namespace {

int matrix_rank(const std::vector<BigInt>& factors) { return static_cast<int>(factors.size()); }

std::vector<BigInt> nontrivial(const std::vector<BigInt>& factors) {
  std::vector<BigInt> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace

std::array<HomologyGroup, 4> homology(const ColouredGraph& g) {
  auto cx = chain_complex(g);
  std::array<std::vector<BigInt>, 5> factors;
  for (int k = 1; k <= 3; ++k) factors[k] = invariant_factors(cx.boundary[k]);
  std::array<HomologyGroup, 4> out;
  for (int k = 0; k <= 3; ++k) {
    int rank_out = k >= 1 ? matrix_rank(factors[k]) : 0;
    int rank_in = k + 1 <= 3 ? matrix_rank(factors[k + 1]) : 0;
    out[k].rank = cx.cells[k] - rank_out - rank_in;
    if (k + 1 <= 3) out[k].torsion = nontrivial(factors[k + 1]);
  }
  return out;
}

HomologyGroup first_homology(const ColouredGraph& g) { return homology(g)[1]; }

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<BigInt> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  // Invariant-factor form of a diagonal matrix.
  IntMatrix m;
  HomologyGroup out;
  out.rank = a.rank + b.rank;
  if (all.empty()) return out;
  // Merge prime-power parts: repeatedly replace (x, y) by (gcd, lcm).
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      BigInt g = gcd(all[i], all[j]);
      BigInt l = all[i] / g * all[j];
      all[i] = g;
      all[j] = l;
    }
  for (const auto& x : all)
    if (x > 1) out.torsion.push_back(x);
  return out;
}

}  // namespace gem
