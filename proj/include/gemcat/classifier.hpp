#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gemcat/code.hpp"
#include "gemcat/graph.hpp"
#include "gemcat/moves.hpp"

namespace gem {

struct ThetaResult {
  ColouredGraph graph;
  int h = 0;
};

struct ThetaOptions {
  /// Largest cycle length minus one allowed on either side.
  int max_side = 8;
  /// Cap on generalized-dipole cancellations per stage.
  int loop_guard = 64;
};

/// theta_i: cancel generalized dipoles of type {0,i} in order of increasing
/// m*n and apex, cleaning up dipoles and rho-pairs after each one. The
/// input's vertex order is used as is. theta_0 is the identity.
ThetaResult theta(const ColouredGraph& g, Colour i, const ThetaOptions& options = {});

/// A permutation of the four colours fixing 0.
using ColourPerm = std::array<Colour, kColours>;

/// The six permutations fixing 0, in lexicographic order.
const std::vector<ColourPerm>& fixing_zero_perms();

/// theta_{eps_i} after ... after theta_{eps_1}, re-canonicalising before
/// every stage. h adds up over the stages.
ThetaResult theta_chain(const ColouredGraph& g, const ColourPerm& eps, int i, const ThetaOptions& options = {});

/// One theta-image of a graph, tagged with the chain that produced it.
struct ThetaImage {
  std::string chain;  // e.g. "0213/2", deep chains joined by '>'
  Code code;
  int h = 0;
};

/// All distinct chains up to the given depth; depth 1 is the 16 ordinary
/// chains, each further level prefixes full chains theta_{eps_3}.
std::vector<ThetaImage> theta_images(const ColouredGraph& g, int depth = 1, const ThetaOptions& options = {});

struct Member {
  Code code;
  int h = 0;
  friend bool operator==(const Member&, const Member&) = default;
};

struct ManifoldClass {
  int id = 0;
  std::string name;  // empty when unnamed
  std::vector<Member> members;  // sorted by code
  friend bool operator==(const ManifoldClass&, const ManifoldClass&) = default;
};

/// Why two codes ended up in one class.
struct Witness {
  Code first;
  std::string first_chain;
  Code second;
  std::string second_chain;
  Code image;
  /// Handle shift applied to the class of `first` (negative: to `second`).
  int shift = 0;
  /// The two members were already in one class with different baselines.
  bool conflict = false;
};

struct ClassPartition {
  std::vector<ManifoldClass> classes;  // ordered by smallest member in input order
  std::vector<Witness> witnesses;

  /// Index of the class holding the code, or -1.
  int class_of(const Code& code) const;
  const Member* member(const Code& code) const;
};

struct ClassifyOptions {
  int depth = 1;
  int jobs = 1;
  ThetaOptions theta;
};

/// Merges codes whose theta-images coincide, keeping handle numbers
/// consistent across the merged class. Handle numbers are shifted so each
/// class has minimum 0.
ClassPartition classify(const std::vector<Code>& codes, const ClassifyOptions& options = {});

/// Members of c with handle number h.
std::vector<Code> subclass(const ManifoldClass& c, int h);

/// "M" with t handles added. The handle is S2xS1, or its twisted version
/// for non-orientable classes.
std::string with_handles(const std::string& base, int t, bool orientable = true);

/// Joins two names into a connected sum, dropping S3 summands.
std::string sum_name(const std::string& a, const std::string& b);

using KnownNames = std::map<Code, std::string>;

/// The order-2 gem, named S3.
KnownNames base_names();

struct NamingOptions {
  int depth = 1;
  ThetaOptions theta;
};

/// Names classes from `known` (directly or through theta-images) and, for
/// the rest, by splitting members as connected sums of named pieces.
/// Classes nothing resolves stay unnamed.
ClassPartition split_and_name(const ClassPartition& part, const KnownNames& known, const NamingOptions& options = {});

/// Class id -> oriented-sum label. Throws AmbiguousResult when the two
/// constructions do not land one in each class.
std::map<int, std::string> distinguish_chirality(const Code& g1, const std::string& m_name, const Code& g2,
                                                 const std::string& n_name, const ClassPartition& part, int c,
                                                 int c_prime, const ClassifyOptions& options = {});

struct Identification {
  bool found = false;
  int class_id = 0;
  std::string name;  // class name with the handles found, or empty
  /// Handle number relative to the class base (h of the matched member
  /// plus handles met on the way).
  int handles = 0;
  Code rigid_code;
  MoveTrace trace;
};

/// Theta-images of every classified member: image code -> (class index,
/// handle number of the image relative to the class base).
using ImageIndex = std::map<Code, std::pair<int, int>>;

ImageIndex build_image_index(const ClassPartition& part, const ClassifyOptions& options = {});

/// Reduces g to a rigid crystallization and looks it up in the partition,
/// directly or through theta-images. Throws NotAManifold. A graph larger
/// than every classified member, or one nothing matches, comes back with
/// found = false. Without an index one is built when the direct lookup
/// fails.
Identification identify(const ColouredGraph& g, const ClassPartition& part, const ClassifyOptions& options = {},
                        const ImageIndex* index = nullptr);

}  // namespace gem
