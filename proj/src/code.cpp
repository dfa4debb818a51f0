#include "gemcat/code.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>

namespace gem {

namespace {

constexpr int kWidth = 3;

std::vector<std::array<Colour, kColours>> colour_permutations(int colours) {
  std::array<Colour, kColours> perm{0, 1, 2, 3};
  std::vector<std::array<Colour, kColours>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.begin() + colours));
  return out;
}

const std::vector<std::array<Colour, kColours>>& permutations_for(int colours) {
  static const auto three = colour_permutations(3);
  static const auto four = colour_permutations(4);
  return colours == 3 ? three : four;
}

std::string format_code(int order, int colours, const std::vector<int>& seq) {
  std::string s;
  s.reserve(4 + seq.size() * (kWidth + 1));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d:", order);
  s += buf;
  for (int v = 0; v < order; ++v) {
    if (v) s += '|';
    for (int k = 0; k < colours; ++k) {
      if (k) s += ',';
      std::snprintf(buf, sizeof buf, "%03d", seq[v * colours + k]);
      s += buf;
    }
  }
  return s;
}

std::vector<int> minimal_sequence(const ColouredGraph& g, int colours) {
  const int n = g.order();
  if (n == 0) return {};
  for (Vertex v = 0; v < n; ++v)
    for (Colour c = 0; c < colours; ++c)
      if (g.neighbour(v, c) == kNoVertex)
        throw GemError(GemError::Kind::IncompleteColouring, "code requires a regular graph");

  std::vector<int> best(n * colours), cur(n * colours);
  bool have_best = false;
  std::vector<int> number(n);
  std::vector<Vertex> queue(n);

  for (Vertex root = 0; root < n; ++root) {
    for (const auto& perm : permutations_for(colours)) {
      std::fill(number.begin(), number.end(), -1);
      number[root] = 0;
      queue[0] = root;
      int next = 1;
      bool less = false;
      bool aborted = false;
      for (int t = 0; t < n && !aborted; ++t) {
        if (t >= next) throw GemError(GemError::Kind::Disconnected, "code requires a connected graph");
        Vertex v = queue[t];
        for (int k = 0; k < colours; ++k) {
          Vertex w = g.neighbour(v, perm[k]);
          if (number[w] == -1) {
            number[w] = next;
            queue[next++] = w;
          }
          int idx = t * colours + k;
          int val = number[w];
          cur[idx] = val;
          if (have_best && !less) {
            if (val > best[idx]) {
              aborted = true;
              break;
            }
            if (val < best[idx]) less = true;
          }
        }
      }
      if (!aborted && (less || !have_best)) {
        best.swap(cur);
        have_best = true;
      }
    }
  }
  return best;
}

}  // namespace

int Code::order() const {
  int v = 0;
  std::from_chars(text_.data(), text_.data() + std::min<size_t>(text_.size(), kWidth), v);
  return v;
}

int Code::colours() const {
  auto bar = text_.find('|');
  std::string_view first(text_);
  first = first.substr(4, bar == std::string::npos ? std::string::npos : bar - 4);
  return static_cast<int>(std::count(first.begin(), first.end(), ',')) + 1;
}

Code canonical_code_only(const ColouredGraph& g, int colours) {
  auto seq = minimal_sequence(g, colours);
  return Code(format_code(g.order(), colours, seq));
}

CanonicalForm canonical_code(const ColouredGraph& g, int colours) {
  Code code = canonical_code_only(g, colours);
  ColouredGraph graph = decode(code);
  return {std::move(code), std::move(graph)};
}

ColouredGraph decode(const Code& code) {
  const std::string& s = code.text();
  auto fail = [&](size_t col, const std::string& why) -> GemError {
    return GemError(GemError::Kind::ParseError, "code column " + std::to_string(col + 1) + ": " + why);
  };
  if (s.size() < 4 || s[3] != ':') throw fail(0, "missing order prefix");
  int order = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + 3, order);
  if (ec != std::errc() || p != s.data() + 3 || order <= 0) throw fail(0, "bad order");
  int colours = code.colours();
  if (colours != 3 && colours != 4) throw fail(4, "records must hold 3 or 4 entries");
  size_t expected = 4 + static_cast<size_t>(order) * (colours * (kWidth + 1)) - 1;
  if (s.size() != expected) throw fail(s.size(), "length does not match order");
  ColouredGraph g(order);
  size_t pos = 4;
  for (Vertex v = 0; v < order; ++v) {
    for (int k = 0; k < colours; ++k) {
      int w = 0;
      auto [q, e2] = std::from_chars(s.data() + pos, s.data() + pos + kWidth, w);
      if (e2 != std::errc() || q != s.data() + pos + kWidth || w < 0 || w >= order)
        throw fail(pos, "bad neighbour number");
      pos += kWidth;
      char sep = pos < s.size() ? s[pos] : '\0';
      char want = k + 1 < colours ? ',' : (v + 1 < order ? '|' : '\0');
      if (sep != want) throw fail(pos, "unexpected separator");
      ++pos;
      Vertex cur = g.neighbour(v, k);
      if (cur == kNoVertex) {
        if (g.neighbour(w, k) != kNoVertex || w == v) throw fail(pos, "not an involution");
        g.link(v, w, k);
      } else if (cur != w) {
        throw fail(pos, "not an involution");
      }
    }
  }
  return g;
}

}  // namespace gem
