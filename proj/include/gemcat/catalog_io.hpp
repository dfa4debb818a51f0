#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemcat/classifier.hpp"
#include "gemcat/generator.hpp"

namespace gem {

class ParseError : public GemError {
 public:
  ParseError(int line, int column, const std::string& message)
      : GemError(Kind::ParseError,
                 "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// ---------------------------------------------------------------- expectations

struct CountRow {
  int vertices = 0;  // 2p
  int surfaces = 0;
  int bipartite = 0;
  int nonbipartite = 0;
};

struct ClusterlessRow {
  int vertices = 0;
  int bipartite = 0;
  int bipartite_clusterless = 0;
  int nonbipartite = 0;
  int nonbipartite_clusterless = 0;
};

/// Rigid crystallization counts for 2p = 2, 4, ..., 30.
const std::vector<CountRow>& rigid_counts();
/// Cluster-less counts for 2p = 2, 4, ..., 30.
const std::vector<ClusterlessRow>& clusterless_counts();

std::optional<CountRow> expected_counts(int vertices);
std::optional<ClusterlessRow> expected_clusterless(int vertices);

struct TableMismatch {
  int vertices = 0;
  std::string column;
  long expected = 0;
  long actual = 0;
};

struct TableReport {
  std::vector<CountRow> counts;
  std::vector<ClusterlessRow> clusterless;
  std::vector<TableMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string to_string() const;
};

/// Regenerates every catalogue up to max_p (at most 15) and compares the
/// sizes with the embedded tables.
TableReport verify_tables(int max_p, bool clusterless, int jobs = 1);

// ---------------------------------------------------------------- files

std::string encode_catalogue(const Catalogue& c);
/// Throws ParseError on malformed, truncated or unsorted input.
Catalogue decode_catalogue(const std::string& text);

/// Class file: one block per class, `class <id> <name or ?>` then
/// `<Code> h=<int>` lines sorted by code, blocks separated by blank lines.
std::string encode_classes(const ClassPartition& part);
ClassPartition decode_classes(const std::string& text);

std::string encode_witnesses(const std::vector<Witness>& witnesses);

/// Lines `<Code> <name>`.
KnownNames decode_known(const std::string& text);
std::string encode_known(const KnownNames& known);

/// `order N`, then four lines `c<k>: a b c ...` giving the neighbour of
/// every vertex along colour k. Lines starting with '#' are comments.
std::string encode_graph(const ColouredGraph& g);
ColouredGraph decode_graph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// File name used for a catalogue inside an output directory.
std::string catalogue_file_name(const Catalogue& c);

}  // namespace gem
