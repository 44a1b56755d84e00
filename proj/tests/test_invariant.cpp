#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qci/invariant.hpp"

using namespace qci;

namespace {

WeightMultiset multiset_of(int modulus, std::initializer_list<std::pair<int, long long>> items) {
  WeightMultiset out(modulus);
  for (auto [value, count] : items) out.add(value, count);
  return out;
}

}  // namespace

TEST_CASE("multiset basics") {
  WeightMultiset m = multiset_of(3, {{0, 3}, {1, 6}});
  CHECK(m.total() == 9);
  CHECK(m.count(1) == 6);
  CHECK(m.count(2) == 0);
  CHECK(m.support() == std::vector<int>{0, 1});
  CHECK(m.to_string() == "0:3 1:6");
  WeightMultiset reduced(4);
  reduced.add(-1);
  reduced.add(7);
  CHECK(reduced.support() == std::vector<int>{3});
  CHECK(reduced.count(3) == 2);
  CHECK_THROWS_AS(WeightMultiset(1), std::invalid_argument);
}

TEST_CASE("negate and scale") {
  WeightMultiset m = multiset_of(3, {{0, 3}, {1, 6}});
  CHECK(negate_multiset(m) == multiset_of(3, {{0, 3}, {2, 6}}));
  CHECK(negate_multiset(negate_multiset(m)) == m);
  CHECK(scale_multiset(0, m) == zero_multiset(3, 9));
  CHECK(scale_multiset(1, m) == m);
  // scaling may merge values
  WeightMultiset w = multiset_of(4, {{1, 3}, {3, 4}});
  CHECK(scale_multiset(2, w) == multiset_of(4, {{2, 7}}));
}

TEST_CASE("torus knot multisets over q6") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  CHECK(phi_invariant(torus_braid(3), q6, phi) == multiset_of(4, {{0, 6}, {1, 24}}));
  CHECK(phi_invariant(torus_braid(9), q6, phi) == multiset_of(4, {{0, 6}, {3, 24}}));
  CHECK(phi_invariant(torus_braid(15), q6, phi) == multiset_of(4, {{0, 6}, {1, 24}}));
}

TEST_CASE("s-knot multisets over q6") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  for (int m : {3, 9})
    for (int n : {3, 9})
      CHECK(phi_invariant(s_knot_braid(m, n), q6, phi) == multiset_of(4, {{0, 30}, {2, 24}}));
}

TEST_CASE("unknot collapses to zeros") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  CHECK(phi_invariant(BraidWord(1, {}), q6, phi) == zero_multiset(4, 6));
}

TEST_CASE("zero cocycle collapses every weight") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 zero = Cocycle2::create(q6, Coefficients{4}, std::vector<int>(36, 0));
  WeightMultiset result = phi_invariant(s_knot_braid(3, 3), q6, zero);
  CHECK(result == zero_multiset(4, 54));
}

TEST_CASE("size conservation") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  for (const BraidWord& w : {torus_braid(5), s_knot_braid(3, 9)}) {
    ClosedDiagram diagram(w);
    CHECK(phi_invariant(w, q6, phi).total() ==
          static_cast<std::int64_t>(enumerate_colorings(diagram, q6).size()));
  }
}

TEST_CASE("crossing weights") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  ClosedDiagram trefoil(torus_braid(3));

  // constant coloring: every weight vanishes on the diagonal
  Coloring constant{{2, 2}};
  for (std::size_t i = 0; i < 3; ++i) CHECK(crossing_weight(trefoil, i, constant, phi) == 0);

  // edge coloring: the three crossing weights sum to 1 mod 4
  for (const Coloring& c : enumerate_colorings(trefoil, q6)) {
    if (c.top[0] == c.top[1]) continue;
    int sum = 0;
    for (std::size_t i = 0; i < 3; ++i) sum += crossing_weight(trefoil, i, c, phi);
    CHECK(sum % 4 == 1);
  }

  // negative crossing carries the negated cocycle value of its recorded pair
  ClosedDiagram nd(BraidWord(2, {{1, -1}, {1, -1}, {1, -1}}));
  for (const Coloring& c : enumerate_colorings(nd, q6)) {
    auto colors = crossing_colors(nd, q6, c);
    for (std::size_t i = 0; i < colors.size(); ++i) {
      int expected = ((-phi.at(colors[i].under, colors[i].over)) % 4 + 4) % 4;
      CHECK(crossing_weight(nd, i, c, phi) == expected);
    }
  }
  CHECK_THROWS_AS(crossing_weight(trefoil, 7, constant, phi), std::invalid_argument);
}

TEST_CASE("mirror words negate the invariant") {
  std::mt19937 rng(4242);
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  int tested = 0;
  while (tested < 15) {
    int k = 2 + static_cast<int>(rng() % 2u);
    int length = 1 + static_cast<int>(rng() % 7u);
    std::vector<BraidLetter> letters;
    for (int i = 0; i < length; ++i)
      letters.push_back(BraidLetter{1 + static_cast<int>(rng() % static_cast<unsigned>(k - 1)),
                                    rng() % 2 ? 1 : -1});
    BraidWord w(k, std::move(letters));
    if (!w.closure_is_knot()) continue;
    ++tested;
    CHECK(phi_invariant(w.mirror(), q6, phi) == negate_multiset(phi_invariant(w, q6, phi)));
  }
}

TEST_CASE("omega family of the trefoil") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  OmegaFamily family = omega_family(torus_braid(3), q6, phi, 4);
  CHECK(family.modulus == 4);
  CHECK(family.members_recur_infinitely);
  REQUIRE(family.members.size() == 4);
  CHECK(family.base == multiset_of(4, {{0, 6}, {1, 24}}));
  CHECK(family.members[0] == zero_multiset(4, 30));
  CHECK(family.members[1] == family.base);
  CHECK(family.members[2] == multiset_of(4, {{0, 6}, {2, 24}}));
  CHECK(family.members[3] == multiset_of(4, {{0, 6}, {3, 24}}));
  // member supports are exactly the scaled base supports
  for (int k = 0; k < 4; ++k) {
    std::set<int> expected;
    for (int v : family.base.support()) expected.insert((k * v) % 4);
    std::vector<int> support = family.members[static_cast<std::size_t>(k)].support();
    CHECK(std::set<int>(support.begin(), support.end()) == expected);
  }
}

TEST_CASE("omega family for the s-knot at r=0") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  OmegaFamily family = omega_family(s_knot_braid(3, 3), q6, phi, 0);
  for (int k = 0; k < 4; ++k) {
    WeightMultiset expected(4);
    expected.add(0, 30);
    expected.add((2 * k) % 4, 24);
    CHECK(family.members[static_cast<std::size_t>(k)] == expected);
  }
}

TEST_CASE("omega family rejects unsupported twist counts") {
  FiniteQuandle q6 = make_q6();  // type 4
  Cocycle2 phi = q6z4_cocycle();
  CHECK_THROWS_AS(omega_family(torus_braid(3), q6, phi, 2), std::invalid_argument);
  CHECK_THROWS_AS(omega_family(torus_braid(3), q6, phi, 3), std::invalid_argument);
  CHECK_THROWS_AS(omega_family(torus_braid(3), q6, phi, -4), std::invalid_argument);
  CHECK_NOTHROW(omega_family(torus_braid(3), q6, phi, 8));
}

TEST_CASE("quandle mismatch is rejected") {
  Cocycle2 phi = q6z4_cocycle();
  CHECK_THROWS_AS(phi_invariant(torus_braid(3), make_dihedral(3), phi), std::invalid_argument);
}

TEST_CASE("twist-spun reference data") {
  CHECK(twist_spun_reference(3) == multiset_of(3, {{0, 3}, {1, 6}}));
  CHECK(twist_spun_reference(5) == multiset_of(5, {{0, 5}, {2, 10}, {3, 10}}));
  CHECK(twist_spun_reference(7).total() == 49);
  CHECK(residue_support(3) == std::vector<int>{0, 1});
  CHECK(residue_support(7) == std::vector<int>{0, 3, 5, 6});
  for (int q : {3, 5, 7, 11, 13}) {
    auto support = residue_support(q);
    CHECK(support.front() == 0);  // k = 0 term
    CHECK(twist_spun_reference(q).total() == static_cast<std::int64_t>(q) * q);
  }
  CHECK(twist_spun_reference_mismatched(3, 5) == zero_multiset(3, 3));
  CHECK_THROWS_AS(twist_spun_reference(4), std::invalid_argument);
  CHECK_THROWS_AS(twist_spun_reference(9), std::invalid_argument);
  CHECK_THROWS_AS(twist_spun_reference_mismatched(3, 3), std::invalid_argument);
}

TEST_CASE("parallel invariant computation is deterministic") {
  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  WeightMultiset sequential = phi_invariant(s_knot_braid(3, 9), q6, phi, 1);
  for (int jobs : {2, 4, 16}) CHECK(phi_invariant(s_knot_braid(3, 9), q6, phi, jobs) == sequential);
}
