#include <doctest.h>

#include <algorithm>

#include "gemcat/census.hpp"
#include "gemcat/classifier.hpp"
#include "gemcat/homology.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

Code order_two() { return canonical_code_only(standard_order_two_gem()); }

// Class membership as a set of sets of (code, h).
std::set<std::set<std::pair<Code, int>>> shape(const ClassPartition& part) {
  std::set<std::set<std::pair<Code, int>>> out;
  for (const auto& c : part.classes) {
    std::set<std::pair<Code, int>> s;
    for (const auto& m : c.members) s.insert({m.code, m.h});
    out.insert(s);
  }
  return out;
}

const ClassPartition& small_partition() {
  static const ClassPartition part = classify(fixture::members(10));
  return part;
}

}  // namespace

TEST_CASE("theta_0 is the identity and the order-2 gem is fixed") {
  for (const auto& code : fixture::members(8)) {
    auto g = decode(code);
    auto t = theta(g, 0);
    CHECK(t.h == 0);
    CHECK(t.graph == g);
  }
  auto images = theta_images(standard_order_two_gem());
  CHECK(images.size() == 16);
  for (const auto& img : images) {
    CHECK(img.code == order_two());
    CHECK(img.h == 0);
  }
}

TEST_CASE("fixing-zero permutations") {
  const auto& perms = fixing_zero_perms();
  CHECK(perms.size() == 6);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  for (const auto& p : perms) CHECK(p[0] == 0);
}

TEST_CASE("theta images are deterministic and lower no homology") {
  for (const auto& code : fixture::members(9)) {
    auto g = decode(code);
    auto a = theta_images(g);
    auto b = theta_images(g);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 16);
    std::set<std::string> chains;
    auto h1 = first_homology(g);
    for (size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].chain == b[k].chain);
      CHECK(a[k].code == b[k].code);
      CHECK(a[k].h == b[k].h);
      chains.insert(a[k].chain);
      // Each cancelled handle takes one free generator with it.
      auto img = first_homology(decode(a[k].code));
      CHECK(img.rank + a[k].h == h1.rank);
      CHECK(img.torsion == h1.torsion);
    }
    CHECK(chains.size() == a.size());
  }
}

TEST_CASE("deeper chains contain the ordinary ones") {
  auto g = decode(fixture::catalogue(6).bipartite.codes.front());
  auto one = theta_images(g, 1);
  auto two = theta_images(g, 2);
  CHECK(two.size() > one.size());
  for (const auto& img : one)
    CHECK(std::any_of(two.begin(), two.end(), [&](const ThetaImage& t) { return t.chain == img.chain; }));
}

TEST_CASE("the three smallest catalogues give three classes") {
  std::vector<Code> codes{order_two()};
  for (int p : {4, 6})
    for (const auto& c : fixture::catalogue(p).bipartite.codes) codes.push_back(c);
  REQUIRE(codes.size() == 3);
  auto part = classify(codes);
  CHECK(part.classes.size() == 3);
  std::set<std::string> h1;
  for (const auto& c : part.classes) h1.insert(first_homology(decode(c.members.front().code)).to_string());
  CHECK(h1 == std::set<std::string>{"0", "Z2", "Z3"});
}

TEST_CASE("handle numbers account for first homology") {
  const auto& part = small_partition();
  std::set<Code> seen;
  for (const auto& c : part.classes) {
    REQUIRE(!c.members.empty());
    int lowest = c.members.front().h;
    for (const auto& m : c.members) lowest = std::min(lowest, m.h);
    CHECK(lowest == 0);
    std::optional<HomologyGroup> base;
    for (const auto& m : c.members) {
      CHECK(seen.insert(m.code).second);
      auto h1 = first_homology(decode(m.code));
      HomologyGroup reduced{h1.rank - m.h, h1.torsion};
      CHECK(reduced.rank >= 0);
      if (!base) base = reduced;
      CHECK(reduced == *base);
    }
  }
  CHECK(seen.size() == fixture::members(10).size());
}

TEST_CASE("classify does not depend on input order") {
  auto codes = fixture::members(10);
  auto forward = classify(codes);
  std::reverse(codes.begin(), codes.end());
  auto backward = classify(codes);
  CHECK(shape(forward) == shape(backward));
  ClassifyOptions wide;
  wide.jobs = 4;
  CHECK(shape(classify(codes, wide)) == shape(backward));
}

TEST_CASE("witnesses connect members of one class") {
  const auto& part = small_partition();
  for (const auto& w : part.witnesses) {
    CHECK_FALSE(w.conflict);
    int k = part.class_of(w.first);
    CHECK(k >= 0);
    CHECK(k == part.class_of(w.second));
  }
  CHECK(part.class_of(Code("999:x")) == -1);
  CHECK(part.member(order_two()) != nullptr);
}

TEST_CASE("subclass selects by handle number") {
  for (const auto& c : small_partition().classes) {
    size_t total = 0;
    for (int h = 0; h < 4; ++h) total += subclass(c, h).size();
    CHECK(total == c.members.size());
  }
}

TEST_CASE("name helpers") {
  CHECK(with_handles("S3", 0) == "S3");
  CHECK(with_handles("S3", 1) == "S2xS1");
  CHECK(with_handles("S3", 2) == "#2(S2xS1)");
  CHECK(with_handles("RP3", 1) == "RP3 # S2xS1");
  CHECK(with_handles("N", 1, false) == "N # S2~xS1");
  CHECK(sum_name("S3", "RP3") == "RP3");
  CHECK(sum_name("RP3", "L(3,1)") == "L(3,1) # RP3");
  CHECK(sum_name("L(3,1)", "RP3") == "L(3,1) # RP3");
}

TEST_CASE("naming from known pieces and connected sums") {
  Code rp3 = fixture::catalogue(4).bipartite.codes.front();
  Code l31 = fixture::catalogue(6).bipartite.codes.front();
  auto sum = simplify_to_rigid(graph_connected_sum(decode(rp3), 0, decode(l31), 0));
  Code sum_code = canonical_code_only(sum.graph);
  CHECK(first_homology(sum.graph).to_string() == "Z6");

  KnownNames known = base_names();
  known[rp3] = "RP3";
  known[l31] = "L(3,1)";
  auto part = split_and_name(classify({order_two(), rp3, l31, sum_code}), known);
  REQUIRE(part.classes.size() == 4);
  CHECK(part.classes[part.class_of(order_two())].name == "S3");
  CHECK(part.classes[part.class_of(rp3)].name == "RP3");
  CHECK(part.classes[part.class_of(sum_code)].name == with_handles("L(3,1) # RP3", sum.handles));

  auto bare = split_and_name(classify({rp3}), base_names());
  CHECK(bare.classes[0].name.empty());
}

TEST_CASE("chirality test refuses a symmetric pair") {
  auto part = classify({order_two(), fixture::catalogue(4).bipartite.codes.front()});
  REQUIRE(part.classes.size() == 2);
  try {
    distinguish_chirality(order_two(), "S3", order_two(), "S3", part, 0, 1);
    FAIL("expected an error");
  } catch (const GemError& e) {
    CHECK(e.kind() == GemError::Kind::AmbiguousResult);
  }
}

TEST_CASE("identify finds members and their dipole expansions") {
  const auto& part = small_partition();
  auto index = build_image_index(part);
  for (const auto& c : part.classes)
    for (const auto& m : c.members) {
      auto id = identify(decode(m.code), part, {}, &index);
      REQUIRE(id.found);
      CHECK(id.class_id == c.id);
      CHECK(id.handles == m.h);
    }
  std::mt19937 rng(5);
  for (const auto& code : fixture::members(8)) {
    auto g = decode(code);
    auto sites = dipole_insertion_sites(g, 0b0011);
    REQUIRE(!sites.empty());
    auto bigger = oracle::scramble(insert_dipole(g, sites[rng() % sites.size()]), rng);
    auto id = identify(bigger, part, {}, &index);
    REQUIRE(id.found);
    CHECK(id.class_id == part.classes[part.class_of(code)].id);
    CHECK(id.handles == part.member(code)->h);
  }
}

TEST_CASE("identify adds handles for a switched rho_3-pair") {
  auto part = split_and_name(classify({order_two()}), base_names());
  auto id = identify(oracle::handle_gem(), part);
  REQUIRE(id.found);
  CHECK(id.handles == 1);
  CHECK(id.name == "S2xS1");
}

TEST_CASE("identify rejects non-manifolds") {
  auto part = classify({order_two()});
  auto surface = generate_surface_catalogue(1).front().graph;
  try {
    identify(surface, part);
    FAIL("expected an error");
  } catch (const GemError& e) {
    CHECK(e.kind() == GemError::Kind::NotAManifold);
  }
}
