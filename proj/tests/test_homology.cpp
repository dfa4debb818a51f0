#include <doctest.h>

#include <random>

#include "gemcat/census.hpp"
#include "gemcat/homology.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  IntMatrix out(a.size(), std::vector<int>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

BigInt determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const size_t n = m.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  BigInt sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

// d_k = gcd of all k-minors; the invariant factors are d_k / d_(k-1).
std::vector<BigInt> determinantal_factors(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  std::vector<BigInt> out;
  BigInt last = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    BigInt d = 0;
    for (unsigned rs = 0; rs < (1u << rows); ++rs) {
      if (__builtin_popcount(rs) != k) continue;
      for (unsigned cs = 0; cs < (1u << cols); ++cs) {
        if (__builtin_popcount(cs) != k) continue;
        IntMatrix sub;
        for (int i = 0; i < rows; ++i) {
          if (!(rs >> i & 1)) continue;
          sub.emplace_back();
          for (int j = 0; j < cols; ++j)
            if (cs >> j & 1) sub.back().push_back(m[i][j]);
        }
        d = gcd(d, abs(determinant(sub)));
      }
    }
    if (d == 0) break;
    out.push_back(d / last);
    last = d;
  }
  return out;
}

}  // namespace

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
  for (int t = 0; t < 300; ++t) {
    IntMatrix m(dim(rng), std::vector<int>(dim(rng)));
    for (auto& row : m)
      for (int& x : row) x = entry(rng);
    CHECK(invariant_factors(m) == determinantal_factors(m));
  }
}

TEST_CASE("Smith normal form agrees with the elimination oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 40), entry(-3, 3), sparse(0, 3);
  for (int t = 0; t < 120; ++t) {
    int rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, std::vector<int>(cols));
    bool thin = t % 2 == 0;
    for (auto& row : m)
      for (int& x : row) x = (thin && sparse(rng) != 0) ? 0 : entry(rng);
    auto mine = invariant_factors(m);
    CHECK(mine == oracle::invariant_factors(m));
    for (size_t i = 1; i < mine.size(); ++i) CHECK(mine[i] % mine[i - 1] == 0);
  }
}

TEST_CASE("Smith normal form on small fixed matrices") {
  CHECK(invariant_factors({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(invariant_factors({{0, 0}, {0, 0}}).empty());
  CHECK(invariant_factors({{4, 6}}) == std::vector<BigInt>{2});
  CHECK(invariant_factors({{-5}}) == std::vector<BigInt>{5});
}

TEST_CASE("chain complex of the order-2 gem") {
  auto cc = chain_complex(standard_order_two_gem());
  CHECK(cc.cells == std::array<int, 4>{4, 6, 4, 2});
  auto h = homology(standard_order_two_gem());
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "0");
  CHECK(h[2].to_string() == "0");
  CHECK(h[3].to_string() == "Z");
}

TEST_CASE("boundary of boundary vanishes and cell counts give chi") {
  for (const auto& code : fixture::members(10)) {
    auto g = decode(code);
    auto cc = chain_complex(g);
    for (int k = 2; k < 4; ++k) {
      auto dd = product(cc.boundary[k - 1], cc.boundary[k]);
      for (const auto& row : dd)
        for (int x : row) CHECK(x == 0);
    }
    auto r = residue_census(g);
    CHECK(cc.cells[0] == r.components[0] + r.components[1] + r.components[2] + r.components[3]);
    CHECK(cc.cells[1] == cycle_census(g).total());
    CHECK(cc.cells[2] == 2 * g.order());
    CHECK(cc.cells[3] == g.order());
    CHECK(cc.cells[0] - cc.cells[1] + cc.cells[2] - cc.cells[3] == 0);
  }
}

TEST_CASE("homology of closed manifolds") {
  for (const auto& code : fixture::members(10)) {
    auto g = decode(code);
    auto h = homology(g);
    CHECK(h[0].to_string() == "Z");
    int alt = h[0].rank - h[1].rank + h[2].rank - h[3].rank;
    CHECK(alt == 0);
    if (manifold_check(g).bipartite) {
      CHECK(h[3].to_string() == "Z");
      CHECK(h[1].rank == h[2].rank);
      CHECK(h[2].torsion.empty());
    } else {
      CHECK(h[3].rank == 0);
    }
  }
}

TEST_CASE("first homology agrees with the presentation oracle") {
  for (const auto& code : fixture::members(10)) {
    auto g = decode(code);
    CHECK(first_homology(g) == oracle::first_homology(g));
  }
  CHECK(first_homology(oracle::handle_gem()).to_string() == "Z");
  CHECK(oracle::first_homology(oracle::handle_gem()).to_string() == "Z");
}

TEST_CASE("direct sum normalisation") {
  HomologyGroup a{1, {2}}, b{0, {3}};
  auto s = direct_sum(a, b);
  CHECK(s.rank == 1);
  CHECK(s.torsion == std::vector<BigInt>{6});
  CHECK(s.to_string() == "Z + Z6");
  HomologyGroup c{0, {2}};
  CHECK(direct_sum(c, c).to_string() == "Z2 + Z2");
  CHECK(direct_sum(HomologyGroup{}, HomologyGroup{2, {}}).to_string() == "Z^2");
}

TEST_CASE("homology rejects open graphs") {
  auto surface = generate_surface_catalogue(1).front().graph;
  CHECK_THROWS_AS(chain_complex(surface), GemError);
}
