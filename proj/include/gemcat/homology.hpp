#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gemcat/graph.hpp"

namespace gem {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<int>>;

/// Cellular chain complex of K(g). Cells of dimension 0..3 are the residue
/// components (colour by colour), the bicoloured cycles (pair by pair), the
/// edges (colour by colour, in vertex order) and the vertices.
/// boundary[k] maps k-chains to (k-1)-chains, rows indexed by (k-1)-cells;
/// boundary[0] is unused.
struct ChainComplex {
  std::array<int, 4> cells{};
  std::array<IntMatrix, 4> boundary;
};

/// Throws NotAGem when g is not a closed 4-coloured graph.
ChainComplex chain_complex(const ColouredGraph& g);

/// Nonzero diagonal entries of the Smith normal form, each dividing the
/// next, all positive.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // entries >= 2, each dividing the next

  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_0 .. H_3 with integer coefficients.
std::array<HomologyGroup, 4> homology(const ColouredGraph& g);

HomologyGroup first_homology(const ColouredGraph& g);

/// The direct sum, normalised to invariant-factor form.
HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

}  // namespace gem
