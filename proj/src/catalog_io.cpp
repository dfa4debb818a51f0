#include "gemcat/catalog_io.hpp"

#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

namespace gem {

const std::vector<CountRow>& rigid_counts() {
  static const std::vector<CountRow> rows{
      {2, 1, 1, 0},       {4, 0, 0, 0},         {6, 0, 0, 0},          {8, 2, 1, 0},
      {10, 0, 0, 0},      {12, 1, 1, 0},        {14, 1, 1, 1},         {16, 2, 3, 1},
      {18, 2, 4, 1},      {20, 8, 23, 9},       {22, 8, 44, 12},       {24, 32, 262, 88},
      {26, 57, 1252, 480}, {28, 185, 7760, 2790}, {30, 466, 56912, 21804},
  };
  return rows;
}

const std::vector<ClusterlessRow>& clusterless_counts() {
  static const std::vector<ClusterlessRow> rows{
      {2, 1, 1, 0, 0},          {4, 0, 0, 0, 0},           {6, 0, 0, 0, 0},
      {8, 1, 1, 0, 0},          {10, 0, 0, 0, 0},          {12, 1, 1, 0, 0},
      {14, 1, 1, 1, 0},         {16, 3, 3, 1, 1},          {18, 4, 2, 1, 0},
      {20, 23, 16, 9, 2},       {22, 44, 20, 12, 4},       {24, 262, 114, 88, 17},
      {26, 1252, 382, 480, 99}, {28, 7760, 1981, 2790, 494}, {30, 56912, 10921, 21804, 2989},
  };
  return rows;
}

std::optional<CountRow> expected_counts(int vertices) {
  for (const auto& r : rigid_counts())
    if (r.vertices == vertices) return r;
  return std::nullopt;
}

std::optional<ClusterlessRow> expected_clusterless(int vertices) {
  for (const auto& r : clusterless_counts())
    if (r.vertices == vertices) return r;
  return std::nullopt;
}

std::string TableReport::to_string() const {
  std::ostringstream out;
  out << "2p      #S      #C     #C~\n";
  for (const auto& r : counts)
    out << std::setw(2) << r.vertices << std::setw(8) << r.surfaces << std::setw(8) << r.bipartite << std::setw(8)
        << r.nonbipartite << "\n";
  if (!clusterless.empty()) {
    out << "2p      #C     #C'     #C~    #C~'\n";
    for (const auto& r : clusterless)
      out << std::setw(2) << r.vertices << std::setw(8) << r.bipartite << std::setw(8) << r.bipartite_clusterless
          << std::setw(8) << r.nonbipartite << std::setw(8) << r.nonbipartite_clusterless << "\n";
  }
  for (const auto& m : mismatches)
    out << "MISMATCH 2p=" << m.vertices << " " << m.column << ": expected " << m.expected << ", got " << m.actual
        << "\n";
  out << (ok() ? "all rows match\n" : std::to_string(mismatches.size()) + " mismatching cells\n");
  return out.str();
}

TableReport verify_tables(int max_p, bool clusterless, int jobs) {
  if (max_p < 1 || max_p > 15) throw GemError(GemError::Kind::InvalidConfiguration, "max p must lie in 1..15");
  TableReport report;
  auto compare = [&](int v, const char* column, long expected, long actual) {
    if (expected != actual) report.mismatches.push_back({v, column, expected, actual});
  };
  for (int p = 1; p <= max_p; ++p) {
    BuildOptions options;
    options.jobs = jobs;
    auto set = build_catalogue(p, options);
    CountRow row{2 * p, static_cast<int>(set.surfaces.size()), static_cast<int>(set.bipartite.codes.size()),
                 static_cast<int>(set.nonbipartite.codes.size())};
    report.counts.push_back(row);
    auto want = expected_counts(2 * p);
    compare(2 * p, "#S", want->surfaces, row.surfaces);
    compare(2 * p, "#C", want->bipartite, row.bipartite);
    compare(2 * p, "#C~", want->nonbipartite, row.nonbipartite);
    if (clusterless) {
      ClusterlessRow cl{2 * p, row.bipartite, static_cast<int>(clusterless_filter(set.bipartite).codes.size()),
                        row.nonbipartite, static_cast<int>(clusterless_filter(set.nonbipartite).codes.size())};
      report.clusterless.push_back(cl);
      auto want_cl = expected_clusterless(2 * p);
      compare(2 * p, "#C'", want_cl->bipartite_clusterless, cl.bipartite_clusterless);
      compare(2 * p, "#C~'", want_cl->nonbipartite_clusterless, cl.nonbipartite_clusterless);
    }
  }
  return report;
}

// ---------------------------------------------------------------- catalogues

std::string encode_catalogue(const Catalogue& c) {
  std::ostringstream out;
  out << "p=" << c.p << " flags=" << (c.bipartite ? "bipartite" : "nonbipartite") << ",rigid"
      << (c.clusterless ? ",clusterless" : "") << " count=" << c.codes.size() << "\n";
  out << "# generator=" << c.generator << "\n";
  for (const auto& code : c.codes) out << code.text() << "\n";
  return out.str();
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

Code checked_code(const std::string& text, int line, int order, int colours) {
  Code code(text);
  try {
    decode(code);
  } catch (const GemError& e) {
    throw ParseError(line, 1, std::string("bad code: ") + e.what());
  }
  if (order > 0 && code.order() != order)
    throw ParseError(line, 1, "code of order " + std::to_string(code.order()) + " in a catalogue of order " +
                                  std::to_string(order));
  if (code.colours() != colours) throw ParseError(line, 1, "code does not use four colours");
  return code;
}

}  // namespace

Catalogue decode_catalogue(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty catalogue file");
  static const std::regex header(R"(p=(\d+) flags=(bipartite|nonbipartite),rigid(,clusterless)? count=(\d+))");
  std::smatch m;
  if (!std::regex_match(lines[0], m, header)) throw ParseError(1, 1, "malformed catalogue header");
  Catalogue c;
  c.p = std::stoi(m[1]);
  c.bipartite = m[2] == "bipartite";
  c.clusterless = m[3].matched;
  size_t count = std::stoul(m[4]);
  c.generator.clear();
  for (size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    int line_no = static_cast<int>(k) + 1;
    if (line.empty()) throw ParseError(line_no, 1, "blank line");
    if (line[0] == '#') {
      if (line.rfind("# generator=", 0) == 0) c.generator = line.substr(12);
      continue;
    }
    Code code = checked_code(line, line_no, 2 * c.p, kColours);
    if (!c.codes.empty() && !(c.codes.back() < code))
      throw ParseError(line_no, 1, "codes must be sorted and distinct");
    c.codes.push_back(std::move(code));
  }
  if (c.codes.size() != count)
    throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                     "header announces " + std::to_string(count) + " codes, found " + std::to_string(c.codes.size()));
  return c;
}

std::string catalogue_file_name(const Catalogue& c) {
  std::ostringstream out;
  out << "c" << std::setw(3) << std::setfill('0') << 2 * c.p << (c.bipartite ? "-bipartite" : "-nonbipartite")
      << (c.clusterless ? "-clusterless" : "") << ".cat";
  return out.str();
}

// ---------------------------------------------------------------- classes

std::string encode_classes(const ClassPartition& part) {
  std::ostringstream out;
  for (size_t k = 0; k < part.classes.size(); ++k) {
    const auto& c = part.classes[k];
    if (k > 0) out << "\n";
    out << "class " << c.id << " " << (c.name.empty() ? "?" : c.name) << "\n";
    for (const auto& m : c.members) out << m.code.text() << " h=" << m.h << "\n";
  }
  return out.str();
}

ClassPartition decode_classes(const std::string& text) {
  auto lines = split_lines(text);
  ClassPartition part;
  static const std::regex head(R"(class (\d+) (.+))");
  static const std::regex member(R"((\S+) h=(\d+))");
  bool expect_header = true;
  for (size_t k = 0; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    int line_no = static_cast<int>(k) + 1;
    std::smatch m;
    if (line.empty()) {
      if (expect_header || part.classes.back().members.empty()) throw ParseError(line_no, 1, "unexpected blank line");
      expect_header = true;
      continue;
    }
    if (expect_header) {
      if (!std::regex_match(line, m, head)) throw ParseError(line_no, 1, "expected 'class <id> <name>'");
      ManifoldClass c;
      c.id = std::stoi(m[1]);
      c.name = m[2] == "?" ? "" : std::string(m[2]);
      part.classes.push_back(std::move(c));
      expect_header = false;
      continue;
    }
    if (!std::regex_match(line, m, member)) throw ParseError(line_no, 1, "expected '<code> h=<int>'");
    auto& members = part.classes.back().members;
    Code code = checked_code(m[1], line_no, 0, kColours);
    if (!members.empty() && !(members.back().code < code))
      throw ParseError(line_no, 1, "members must be sorted and distinct");
    members.push_back({std::move(code), std::stoi(m[2])});
  }
  if (!part.classes.empty() && part.classes.back().members.empty())
    throw ParseError(static_cast<int>(lines.size()) + 1, 1, "class without members");
  return part;
}

std::string encode_witnesses(const std::vector<Witness>& witnesses) {
  std::ostringstream out;
  for (const auto& w : witnesses)
    out << w.first.text() << " " << w.first_chain << " ~ " << w.second.text() << " " << w.second_chain
        << " image=" << w.image.text() << " shift=" << w.shift << (w.conflict ? " conflict" : "") << "\n";
  return out.str();
}

KnownNames decode_known(const std::string& text) {
  auto lines = split_lines(text);
  KnownNames known;
  for (size_t k = 0; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line.empty() || line[0] == '#') continue;
    size_t space = line.find(' ');
    if (space == std::string::npos || space + 1 >= line.size())
      throw ParseError(static_cast<int>(k) + 1, static_cast<int>(line.size()) + 1, "expected '<code> <name>'");
    known[checked_code(line.substr(0, space), static_cast<int>(k) + 1, 0, kColours)] = line.substr(space + 1);
  }
  return known;
}

std::string encode_known(const KnownNames& known) {
  std::string out;
  for (const auto& [code, name] : known) out += code.text() + " " + name + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace gem
