#pragma once

#include <map>
#include <string>
#include <vector>

#include "gemcat/code.hpp"
#include "gemcat/graph.hpp"

namespace gem {

/// Connected, regular, rigid and planar graph on colours 0,1,2.
struct SurfaceGraph {
  ColouredGraph graph;
  Code code;  // three-colour code; graph is the canonical form
};

/// All rigid planar connected 3-coloured graphs of order 2p, up to colour
/// isomorphism, sorted by code.
std::vector<SurfaceGraph> generate_surface_catalogue(int p);

enum class PlanarityRule {
  /// Every component of every partial residue must be a sphere with holes.
  Genus,
  /// The counting identity 2g - dg = sum of closed cycles - m, which
  /// additionally asks every open component to be a disc.
  Formula,
  /// No partial check; only the final residues are tested.
  None,
};

struct CompletionOptions {
  PlanarityRule planarity = PlanarityRule::Genus;
  /// Refuse colour-3 edges between vertices of one bicoloured cycle.
  bool same_cycle_rule = true;
  /// Prune on rho-pairs among closed cycles while edges are added, and
  /// refuse colour-3 edges parallel to another edge.
  bool rigidity_pruning = true;
  /// Prune on residue components that closed up early.
  bool connectivity_pruning = true;
  /// Keep only rigid results (Step 4).
  bool require_rigid = true;
};

/// Left-hand minus right-hand side of the partial planarity identity for
/// the residue missing colour r (r in 0..2) of a graph whose colour-3
/// involution is partial; zero means the identity holds.
int planarity_defect(const ColouredGraph& g, Colour r);

/// Every crystallization obtained by adding a colour-3 perfect matching to
/// the surface graph, canonicalised, sorted and without repeats.
std::vector<Code> complete_surface(const ColouredGraph& surface, const CompletionOptions& options = {});

struct Catalogue {
  int p = 0;
  bool bipartite = true;
  bool clusterless = false;
  std::vector<Code> codes;  // sorted, distinct
  std::string generator = "gemcat-1";
};

struct CatalogueSet {
  std::vector<SurfaceGraph> surfaces;
  Catalogue bipartite;
  Catalogue nonbipartite;
};

struct BuildOptions {
  bool clusterless = false;
  int jobs = 1;
  CompletionOptions completion;
};

CatalogueSet build_catalogue(int p, const BuildOptions& options = {});

/// Drops members with a cluster-type vertex.
Catalogue clusterless_filter(const Catalogue& c);

}  // namespace gem
