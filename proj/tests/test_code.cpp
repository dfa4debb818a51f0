#include <doctest.h>

#include "gemcat/census.hpp"
#include "gemcat/code.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("golden code of the order-2 gem") {
  auto form = canonical_code(standard_order_two_gem());
  CHECK(form.code.text() == "002:001,001,001,001|000,000,000,000");
  CHECK(form.code.order() == 2);
  CHECK(form.code.colours() == 4);
  CHECK(form.graph == standard_order_two_gem());
}

TEST_CASE("code is invariant under relabelling and recolouring") {
  std::mt19937 rng(7);
  auto all = fixture::members(10);
  for (const auto& code : all) {
    auto g = decode(code);
    for (int k = 0; k < 5; ++k) CHECK(canonical_code_only(oracle::scramble(g, rng)) == code);
  }
}

TEST_CASE("decode and re-encode is the identity") {
  for (const auto& code : fixture::members(10)) {
    auto form = canonical_code(decode(code));
    CHECK(form.code == code);
    CHECK(form.graph == decode(code));
  }
}

TEST_CASE("distinct members have distinct codes and are not isomorphic") {
  auto all = fixture::members(9);
  std::set<Code> seen(all.begin(), all.end());
  CHECK(seen.size() == all.size());
}

TEST_CASE("three-colour codes") {
  for (const auto& s : generate_surface_catalogue(8)) {
    CHECK(s.code.colours() == 3);
    CHECK(canonical_code_only(s.graph, 3) == s.code);
  }
}

TEST_CASE("code errors") {
  auto two = ColouredGraph::disjoint_union(standard_order_two_gem(), standard_order_two_gem());
  try {
    canonical_code(two);
    FAIL("expected an error");
  } catch (const GemError& e) {
    CHECK(e.kind() == GemError::Kind::Disconnected);
  }
  for (const char* bad : {"", "002", "002:001,001,001", "002:001,001,001,001|000,000,000", "004:001,001,001,001|000,000,000,000",
                          "002:001,001,001,001|000,000,000,00x"}) {
    try {
      decode(Code(bad));
      FAIL("expected an error for " << bad);
    } catch (const GemError& e) {
      CHECK(e.kind() == GemError::Kind::ParseError);
    }
  }
}
