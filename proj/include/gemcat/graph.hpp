#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gem {

using Vertex = int;
using Colour = int;

inline constexpr int kColours = 4;
inline constexpr Vertex kNoVertex = -1;

/// Error raised for malformed graphs and invalid move descriptors.
class GemError : public std::runtime_error {
 public:
  enum class Kind {
    IncompleteColouring,
    Loop,
    SlotClash,
    OddOrder,
    NotRegular,
    NotConnected,
    Disconnected,
    NonProperDipole,
    InvalidPair,
    InvalidConfiguration,
    NoCluster,
    NotAGem,
    NotAManifold,
    ParseError,
    AmbiguousResult,
    Unknown,
  };

  GemError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(GemError::Kind kind);

/// Edge-coloured multigraph on colours {0,1,2,3}. A slot may be empty
/// (kNoVertex), which is how partial graphs used during generation are held;
/// every filled colour class is a fixed-point-free partial involution.
class ColouredGraph {
 public:
  ColouredGraph() = default;
  explicit ColouredGraph(int order);

  int order() const noexcept { return static_cast<int>(adj_.size()); }

  Vertex neighbour(Vertex v, Colour c) const { return adj_[v][c]; }
  const std::array<Vertex, kColours>& slots(Vertex v) const { return adj_[v]; }

  /// Joins v and w with a c-coloured edge. Both slots must be free.
  void link(Vertex v, Vertex w, Colour c);
  /// Removes the c-coloured edge at v (and its mirror slot).
  void unlink(Vertex v, Colour c);

  bool has_colour(Colour c) const;
  /// Every vertex has all colours of the mask filled.
  bool is_regular(unsigned colour_mask = 0xF) const;
  /// Number of filled colour-c slots divided by two.
  int edge_count(Colour c) const;

  /// Throws GemError if an involution is broken. Cheap sanity check.
  void check_involutions() const;

  /// Vertex v of this graph becomes offset + v in the result.
  static ColouredGraph disjoint_union(const ColouredGraph& a, const ColouredGraph& b);

  /// Keeps the vertices with keep[v] true, renumbered in increasing order.
  /// Slots pointing to removed vertices become empty.
  ColouredGraph induced(const std::vector<bool>& keep) const;

  /// Applies a colour permutation: colour c becomes perm[c].
  ColouredGraph recoloured(const std::array<Colour, kColours>& perm) const;
  /// Applies a vertex relabelling: vertex v becomes relabel[v].
  ColouredGraph relabelled(std::span<const Vertex> relabel) const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  std::vector<std::array<Vertex, kColours>> adj_;
};

struct ColouredEdge {
  Vertex a;
  Vertex b;
  Colour colour;
};

/// Validated constructor for a closed 4-coloured graph.
ColouredGraph build_graph(int order, std::span<const ColouredEdge> edges);

/// The unique order-2 crystallization (of the 3-sphere).
ColouredGraph standard_order_two_gem();

/// Connected components of the subgraph spanned by the colours in the mask.
/// Returns component id per vertex and writes the number of components.
std::vector<int> components(const ColouredGraph& g, unsigned colour_mask, int* count);

bool is_connected(const ColouredGraph& g, unsigned colour_mask = 0xF);

/// Proper 2-colouring search over all filled edges.
bool is_bipartite(const ColouredGraph& g);
/// Side (0/1) of each vertex for a bipartite graph; empty if not bipartite.
std::vector<int> bipartition(const ColouredGraph& g);

inline unsigned mask_without(Colour c) { return 0xFu & ~(1u << c); }
inline unsigned mask_of(Colour a, Colour b) { return (1u << a) | (1u << b); }

}  // namespace gem
