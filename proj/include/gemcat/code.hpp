#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gemcat/graph.hpp"

namespace gem {

/// Canonical text form of a connected coloured graph. Layout: the order as
/// three digits and a colon, then one record per vertex in canonical order,
/// records separated by '|', each listing the neighbour numbers (three digits,
/// comma separated) in canonical colour order. Fixed widths make the string
/// order agree with the numeric order of the underlying sequence.
class Code {
 public:
  Code() = default;
  explicit Code(std::string text) : text_(std::move(text)) {}

  const std::string& text() const noexcept { return text_; }
  bool empty() const noexcept { return text_.empty(); }
  int order() const;
  /// Colours per vertex record (3 for surface graphs, 4 otherwise).
  int colours() const;

  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  std::string text_;
};

struct CanonicalForm {
  Code code;
  /// The graph rebuilt from the code; vertex i is the i-th numbered vertex
  /// and colour k is the k-th colour of the minimising permutation.
  ColouredGraph graph;
};

/// Minimum over every root vertex and every permutation of the first
/// `colours` colours of the breadth-first numbering serialisation.
/// Throws GemError::Disconnected on disconnected input.
CanonicalForm canonical_code(const ColouredGraph& g, int colours = kColours);

/// Only the code (skips the reconstruction).
Code canonical_code_only(const ColouredGraph& g, int colours = kColours);

/// Rebuilds the graph a code describes. Throws GemError::ParseError.
ColouredGraph decode(const Code& code);

}  // namespace gem
