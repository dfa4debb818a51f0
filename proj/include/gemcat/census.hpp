#pragma once

#include <array>
#include <vector>

#include "gemcat/graph.hpp"

namespace gem {

/// Unordered colour pairs in the fixed order {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
inline constexpr std::array<std::array<Colour, 2>, 6> kColourPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(Colour i, Colour j);
/// The pair made of the two colours not in {i,j}.
int complementary_pair(int pair);

/// A closed bicoloured cycle as a cyclic vertex sequence, starting at its
/// smallest vertex and leaving along the lower colour of the pair.
using Cycle = std::vector<Vertex>;

struct CycleCensus {
  std::array<std::vector<Cycle>, 6> cycles;
  /// cycle_of[pair][v]: index into cycles[pair], or -1 when v lies on an
  /// open path (partial graphs only).
  std::array<std::vector<int>, 6> cycle_of;

  int count(int pair) const { return static_cast<int>(cycles[pair].size()); }
  int count(Colour i, Colour j) const { return count(pair_index(i, j)); }
  int total() const;
};

/// Closed {i,j}-cycles of g; paths broken by empty slots are skipped.
std::vector<Cycle> bicoloured_cycles(const ColouredGraph& g, Colour i, Colour j,
                                     std::vector<int>* cycle_of = nullptr);

CycleCensus cycle_census(const ColouredGraph& g);

struct ResidueCensus {
  /// Components of the graph with colour i removed.
  std::array<int, kColours> components{};
  /// Components of the residue holding a vertex with an empty slot among the
  /// residue colours.
  std::array<int, kColours> boundary_components{};
};

ResidueCensus residue_census(const ColouredGraph& g);

/// Sum over residues minus sum over bicoloured cycles plus order.
int euler_characteristic(const ColouredGraph& g);

/// Sphere test for the 3-coloured graph spanned by `colours`: the graph must
/// be regular and connected on those colours; true iff the count of
/// bicoloured cycles equals half the order plus two.
bool is_sphere_gem(const ColouredGraph& g, std::array<Colour, 3> colours);

/// True iff every component of the residue missing colour i is a sphere.
bool residue_is_spherical(const ColouredGraph& g, Colour i);

struct ManifoldCheck {
  bool is_gem = false;
  bool is_crystallization = false;
  bool bipartite = false;
};

ManifoldCheck manifold_check(const ColouredGraph& g);

/// Cheaper predicate used on hot paths.
bool is_crystallization(const ColouredGraph& g);

}  // namespace gem
