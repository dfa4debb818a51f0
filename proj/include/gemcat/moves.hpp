#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gemcat/census.hpp"
#include "gemcat/graph.hpp"

namespace gem {

/// One line of a move log: operation, descriptor, order before and after.
struct TraceEntry {
  std::string operation;
  std::string descriptor;
  int order_before = 0;
  int order_after = 0;
};

using MoveTrace = std::vector<TraceEntry>;

std::string format_trace(const MoveTrace& trace);

// ---------------------------------------------------------------- dipoles

/// Vertices v < w joined by exactly the colours in `colours`.
struct Dipole {
  Vertex v = kNoVertex;
  Vertex w = kNoVertex;
  unsigned colours = 0;

  int size() const { return __builtin_popcount(colours); }
  friend bool operator==(const Dipole&, const Dipole&) = default;
};

/// v and w are joined by exactly the colours of the mask (1 to 3 of them) and
/// lie in different components of the graph on the remaining colours.
bool is_proper_dipole(const ColouredGraph& g, Vertex v, Vertex w, unsigned colours);

/// All proper dipoles, sorted by (v, w).
std::vector<Dipole> find_dipoles(const ColouredGraph& g);

/// Removes v and w and welds the dangling edges of every colour outside the
/// dipole. Surviving vertices keep their relative order.
ColouredGraph cancel_dipole(const ColouredGraph& g, const Dipole& d);

/// Where to insert a dipole: the colours joining the two new vertices, and
/// for each other colour c the c-edge (tail[c], head[c]) to subdivide; the
/// first new vertex takes tail[c], the second takes head[c].
struct DipoleSite {
  unsigned colours = 0;
  std::array<Vertex, kColours> tail{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  std::array<Vertex, kColours> head{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
};

/// New vertices get indices order() and order()+1. Throws NonProperDipole if
/// the inserted pair would not be a proper dipole.
ColouredGraph insert_dipole(const ColouredGraph& g, const DipoleSite& site);

/// Every insertion site for a dipole on the given colours that yields a
/// proper dipole. Sites related by swapping the two new vertices are listed
/// once.
std::vector<DipoleSite> dipole_insertion_sites(const ColouredGraph& g, unsigned colours);

// ---------------------------------------------------------------- rho pairs

/// Two distinct edges of one colour sharing `multiplicity` bicoloured cycles.
/// Edge endpoints are stored with first < second.
struct RhoPair {
  Colour colour = 0;
  std::pair<Vertex, Vertex> e;
  std::pair<Vertex, Vertex> f;
  int multiplicity = 0;
};

std::vector<RhoPair> find_rho_pairs(const ColouredGraph& g);
bool is_rigid(const ColouredGraph& g);

/// Same test restricted to the colours of the mask; used for 3-coloured
/// surface graphs, where a pair sharing both its bicoloured cycles counts.
bool is_rigid_on(const ColouredGraph& g, unsigned colour_mask);

/// Replaces the c-edges (a,b) and (x,y) by (a,x) and (b,y).
ColouredGraph switch_edges(const ColouredGraph& g, Colour c, Vertex a, Vertex b, Vertex x, Vertex y);

/// Switches the pair so that every shared bicoloured cycle splits in two.
/// Throws InvalidPair when r is not a rho-pair of g or no pairing splits
/// all shared cycles.
ColouredGraph switch_rho_pair(const ColouredGraph& g, const RhoPair& r);

// ---------------------------------------------------------------- generalized dipoles

/// An {i,j}-cycle of length m+1 and the complementary {k,l}-cycle of length
/// n+1 meeting only at the apex. Both cycles start at the apex; cycle_ij
/// leaves it along colour i, cycle_kl along colour k (i<j, k<l).
struct GeneralizedDipole {
  Colour i = 0, j = 1;
  Vertex apex = kNoVertex;
  Cycle cycle_ij;
  Cycle cycle_kl;
  int m = 0;
  int n = 0;
};

/// Dipoles of type {i,j} with m <= max_m and n <= max_n, sorted by
/// (m*n, apex, m).
std::vector<GeneralizedDipole> find_generalized_dipoles(const ColouredGraph& g, Colour i, Colour j, int max_m,
                                                        int max_n);

/// Replaces the two cycles by an m-by-n grid of vertices: row s copies the
/// {k,l}-path of the second cycle, column t copies the {i,j}-path of the
/// first. For m = 1 or n = 1 this is exactly a 2-dipole cancellation.
/// Surviving vertices keep their relative order; grid vertices are appended
/// row by row. Throws InvalidConfiguration.
ColouredGraph cancel_generalized_dipole(const ColouredGraph& g, const GeneralizedDipole& gd);

/// Inverse of the cancellation for a grid whose centre-like corner is given:
/// collapses the m-by-n grid with top-left vertex `corner` back to a pair of
/// cycles meeting at one new vertex. Returns nullopt when the grid pattern
/// is not present.
std::optional<ColouredGraph> collapse_grid(const ColouredGraph& g, Vertex corner, Colour i, Colour j, int m, int n);

// ---------------------------------------------------------------- connected sums

/// Deletes v1 and v2 and joins, colour by colour, the dangling edge of the
/// first graph to the dangling edge of the second. Vertices of g1 (without
/// v1) come first, then those of g2 (without v2).
ColouredGraph graph_connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2);

struct SplitResult {
  ColouredGraph first;
  ColouredGraph second;
  /// The four removed edges, indexed by colour.
  std::array<std::pair<Vertex, Vertex>, kColours> cut;
};

/// Finds a quadruple of edges, one per colour, whose removal leaves two
/// components, and caps each side with a new vertex. Returns the split with
/// the lexicographically smallest cut, or nullopt.
std::optional<SplitResult> split_connected_sum(const ColouredGraph& g);

/// All disconnecting colour-transversal quadruples.
std::vector<std::array<std::pair<Vertex, Vertex>, kColours>> disconnecting_quadruples(const ColouredGraph& g);

// ---------------------------------------------------------------- clusters

struct ClusterVertex {
  Vertex v = kNoVertex;
  /// Colour pairs (indices into kColourPairs) of the four length-4 cycles.
  std::array<int, 4> pairs{};
  std::array<Cycle, 4> cycles;
  std::vector<Vertex> involved;  // sorted, nine entries
};

std::vector<ClusterVertex> find_cluster_vertices(const ColouredGraph& g);

/// Removes every cluster-type vertex, each step strictly lowering the order
/// and preserving the manifold. Throws NoCluster when there is none.
ColouredGraph eliminate_clusters(const ColouredGraph& g, MoveTrace* trace = nullptr);

/// One elimination step at the given cluster vertex; nullopt if no
/// order-reducing realisation was found.
std::optional<ColouredGraph> eliminate_cluster_at(const ColouredGraph& g, const ClusterVertex& cv,
                                                  MoveTrace* trace = nullptr);

// ---------------------------------------------------------------- simplification

struct RigidForm {
  ColouredGraph graph;
  /// Number of rho_3-pairs switched.
  int handles = 0;
};

/// Cancels proper dipoles and switches rho-pairs until the graph is a rigid
/// crystallization.
RigidForm simplify_to_rigid(const ColouredGraph& g, MoveTrace* trace = nullptr);

}  // namespace gem
