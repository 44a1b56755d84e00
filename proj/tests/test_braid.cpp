#include <catch2/catch_amalgamated.hpp>

#include "qci/braid.hpp"
#include "qci/diagram.hpp"

using namespace qci;

TEST_CASE("parse expands powers") {
  BraidWord w = parse_braid("2: s1^3");
  CHECK(w.strands() == 2);
  REQUIRE(w.length() == 3);
  for (const auto& l : w.letters()) CHECK(l == BraidLetter{1, 1});

  BraidWord s = parse_braid("3: s1^3 s2^-1 s1^3 s2^-1");
  CHECK(s == s_knot_braid(3, 3));

  CHECK(parse_braid("3: s1 s2^-1 s1 s2^-1").length() == 4);
  CHECK(parse_braid("2: s1^0").length() == 0);
  CHECK(parse_braid("1:").length() == 0);
  CHECK(parse_braid("  4 :  s3^-2  ").letters() ==
        std::vector<BraidLetter>{{3, -1}, {3, -1}});
}

TEST_CASE("parse reports the position of the first error") {
  try {
    parse_braid("2: s3");
    FAIL("expected parse error");
  } catch (const BraidParseError& e) {
    CHECK(e.position == 3);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("out of range"));
  }
  CHECK_THROWS_AS(parse_braid("2: x1"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("2 s1"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("2: s1^"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("2: s1x"), BraidParseError);
  CHECK_THROWS_AS(parse_braid(""), BraidParseError);
}

TEST_CASE("torus braids") {
  BraidWord t3 = torus_braid(3);
  CHECK(t3.strands() == 2);
  CHECK(t3.length() == 3);
  CHECK(torus_braid(1).length() == 1);
  CHECK(torus_braid(9).length() == 9);
  CHECK_THROWS_AS(torus_braid(4), std::invalid_argument);
  CHECK_THROWS_AS(torus_braid(0), std::invalid_argument);
  CHECK_THROWS_AS(torus_braid(-3), std::invalid_argument);
}

TEST_CASE("s-knot braids") {
  CHECK(s_knot_braid(3, 9).length() == 14);
  CHECK(s_knot_braid(9, 9).closure_is_knot());
  std::vector<int> perm = s_knot_braid(9, 9).closure_permutation();
  // single 3-cycle
  CHECK(perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(perm[0])])] == 0);
  CHECK(perm[0] != 0);
}

TEST_CASE("closure permutation and knot detection") {
  CHECK(torus_braid(3).closure_is_knot());
  CHECK_FALSE(BraidWord(2, {{1, 1}, {1, 1}}).closure_is_knot());  // 2-component link
  CHECK_FALSE(BraidWord(3, {}).closure_is_knot());
  CHECK(BraidWord(1, {}).closure_is_knot());  // unknot

  CHECK_THROWS_AS(ClosedDiagram(BraidWord(2, {{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK_NOTHROW(ClosedDiagram(BraidWord(1, {})));
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(BraidWord(2, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(2, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
  CHECK_NOTHROW(BraidWord(2, {}));  // empty word is a valid braid
}

TEST_CASE("conjugation and mirror") {
  BraidWord w = s_knot_braid(3, 3);
  BraidWord c = w.conjugated_by({2, 1});
  CHECK(c.length() == w.length() + 2);
  CHECK(c.letters().front() == BraidLetter{2, 1});
  CHECK(c.letters().back() == BraidLetter{2, -1});
  CHECK(c.closure_is_knot());

  BraidWord m = w.mirror();
  CHECK(m.length() == w.length());
  CHECK(m.letters()[0] == BraidLetter{1, -1});
  CHECK(m.mirror() == w);
}

TEST_CASE("to_string groups runs") {
  CHECK(to_string(torus_braid(3)) == "2: s1^3");
  CHECK(to_string(s_knot_braid(3, 3)) == "3: s1^3 s2^-1 s1^3 s2^-1");
  CHECK(to_string(BraidWord(2, {})) == "2:");
  CHECK(parse_braid(to_string(s_knot_braid(9, 3))) == s_knot_braid(9, 3));
}
