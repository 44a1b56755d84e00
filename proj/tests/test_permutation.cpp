#include <catch2/catch_amalgamated.hpp>

#include "qci/permutation.hpp"

using qci::Perm;

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::from_cycle_string("(1234)", 4);
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 3);
  CHECK(p(3) == 0);
  CHECK(p.cycle_string() == "(1234)");

  Perm t = Perm::from_cycle_string("(12)", 4);
  CHECK(t.cycle_string() == "(12)");
  CHECK(t(2) == 2);

  CHECK(Perm::from_cycle_string("()", 3).is_identity());
}

TEST_CASE("compose applies the right factor first") {
  Perm f = Perm::from_cycle_string("(12)", 3);
  Perm g = Perm::from_cycle_string("(23)", 3);
  CHECK(qci::compose(f, g) == Perm::from_cycle_string("(123)", 3));
  CHECK(qci::compose(g, f) == Perm::from_cycle_string("(132)", 3));
}

TEST_CASE("inverse and order") {
  Perm p = Perm::from_cycle_string("(1234)", 4);
  CHECK(p.order() == 4);
  CHECK(qci::compose(p, p.inverse()).is_identity());
  CHECK(Perm(5).order() == 1);
  CHECK(Perm::from_cycle_string("(123)(45)", 5).order() == 6);
}

TEST_CASE("conjugation replaces cycle letters") {
  // (1342) conjugated through (1234) relabels its cycle to (1324).
  Perm g = Perm::from_cycle_string("(1342)", 4);
  Perm h = Perm::from_cycle_string("(1234)", 4);
  CHECK(qci::conjugate(g, h) == Perm::from_cycle_string("(1324)", 4));
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycle_string("(15)", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycle_string("(12", 4), std::invalid_argument);
}
