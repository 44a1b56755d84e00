#include <catch2/catch_amalgamated.hpp>

#include "qci/cocycle.hpp"

using namespace qci;

namespace {

int phi_1based(const Cocycle2& phi, int a, int b) { return phi.at(a - 1, b - 1); }

}  // namespace

TEST_CASE("q6z4 cocycle spot values") {
  Cocycle2 phi = q6z4_cocycle();
  CHECK(phi.modulus() == 4);
  CHECK(phi_1based(phi, 1, 5) == 2);
  CHECK(phi_1based(phi, 5, 3) == 2);
  CHECK(phi_1based(phi, 1, 6) == 3);
  CHECK(phi_1based(phi, 3, 2) == 3);
  CHECK(phi_1based(phi, 2, 2) == 0);
  CHECK(phi_1based(phi, 3, 6) == 1);  // value on an inverse pair
  CHECK(phi_1based(phi, 2, 1) == 1);
  CHECK(phi_1based(phi, 4, 2) == 0);
}

TEST_CASE("q6z4 cocycle passes the full scan") {
  Cocycle2 phi = q6z4_cocycle();
  CocycleReport report = verify_2cocycle(phi.quandle(), phi.coefficients(), phi.values());
  CHECK(report.all_pass());
}

TEST_CASE("zero tables are cocycles") {
  FiniteQuandle r5 = make_dihedral(5);
  CHECK(verify_2cocycle(r5, Coefficients{3}, std::vector<int>(25, 0)).all_pass());
  CHECK(verify_3cocycle(r5, Coefficients{3}, std::vector<int>(125, 0)).all_pass());
}

TEST_CASE("perturbed q6z4 cocycle fails with a witness") {
  Cocycle2 phi = q6z4_cocycle();
  std::vector<int> table = phi.values();
  table[static_cast<std::size_t>(0 * 6 + 4)] = 3;  // phi(1,5): 2 -> 3
  CocycleReport report = verify_2cocycle(phi.quandle(), phi.coefficients(), table);
  CHECK_FALSE(report.all_pass());
  CHECK_FALSE(report.identity.pass);
  CHECK(report.identity.witness.size() == 3);
  CHECK(report.identity.lhs != report.identity.rhs);
}

TEST_CASE("diagonal violations are reported separately") {
  FiniteQuandle r3 = make_dihedral(3);
  std::vector<int> table(9, 0);
  table[4] = 1;  // phi(1,1)
  CocycleReport report = verify_2cocycle(r3, Coefficients{3}, table);
  CHECK_FALSE(report.vanishing.pass);
  CHECK(report.vanishing.witness == std::vector<int>{1, 1});
}

TEST_CASE("reduced case identities hold on octahedron edges") {
  // Redundancy check: with c ranging over edges (b != a, a^{-1}) the three
  // reduced identities of the full 2-cocycle condition hold, with the inverse
  // pair value as the constant.
  Cocycle2 phi = q6z4_cocycle();
  const FiniteQuandle& q6 = phi.quandle();
  const int n = 4;
  const int delta = phi.at(0, q6.inverse_of(0));
  for (int a = 0; a < 6; ++a) {
    CHECK(phi.at(a, q6.inverse_of(a)) == delta);
    for (int b = 0; b < 6; ++b) {
      if (b == a || b == q6.inverse_of(a)) continue;
      int ab = q6.op(a, b);
      int bi = q6.inverse_of(b);
      int ai = q6.inverse_of(a);
      // phi(a,b) + phi(a*b,a) - phi(a,b*a) = 0
      CHECK(((phi.at(a, b) + phi.at(ab, a) - phi.at(a, q6.op(b, a))) % n + n) % n == 0);
      // phi(a,b^-1) + phi(a*b^-1,b) - phi(a,b) - phi(a*b,b^-1) = 0
      CHECK(((phi.at(a, bi) + phi.at(q6.op(a, bi), b) - phi.at(a, b) - phi.at(ab, bi)) % n + n) %
                n ==
            0);
      // phi(a,b) + phi(a*b,a^-1) - phi(a,b*a^-1) = delta
      CHECK(((phi.at(a, b) + phi.at(ab, ai) - phi.at(a, q6.op(b, ai))) % n + n) % n == delta);
    }
  }
}

TEST_CASE("mochizuki cocycle values") {
  Cocycle3 theta = mochizuki_cocycle(3);
  CHECK(theta.modulus() == 3);
  CHECK(theta.at(0, 1, 2) == 2);
  CHECK(theta.at(1, 1, 2) == 0);
  CHECK(theta.at(0, 2, 1) == 2);
  CHECK(theta.at(1, 0, 2) == 1);
  CHECK(theta.at(2, 0, 1) == 1);
}

TEST_CASE("mochizuki cocycles pass the full scan") {
  for (int p : {3, 5, 7, 11}) {
    Cocycle3 theta = mochizuki_cocycle(p);
    CocycleReport report = verify_3cocycle(theta.quandle(), theta.coefficients(), theta.values());
    CHECK(report.all_pass());
  }
}

TEST_CASE("mochizuki degeneracy by direct scan") {
  Cocycle3 theta = mochizuki_cocycle(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      CHECK(theta.at(x, x, y) == 0);
      CHECK(theta.at(x, y, y) == 0);
    }
}

TEST_CASE("mochizuki survives large exponents exactly") {
  // (2*x3-x2)^p at p=23 needs ~2^122; exact arithmetic must not wrap.
  Cocycle3 theta = mochizuki_cocycle(23);
  CocycleReport report = verify_3cocycle(theta.quandle(), theta.coefficients(), theta.values());
  CHECK(report.all_pass());
}

TEST_CASE("perturbed mochizuki fails") {
  Cocycle3 theta = mochizuki_cocycle(5);
  std::vector<int> table = theta.values();
  table[(0 * 5 + 1) * 5 + 2] = (table[(0 * 5 + 1) * 5 + 2] + 1) % 5;
  CocycleReport report = verify_3cocycle(theta.quandle(), theta.coefficients(), table);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("mochizuki rejects bad moduli") {
  CHECK_THROWS_AS(mochizuki_cocycle(4), std::invalid_argument);
  CHECK_THROWS_AS(mochizuki_cocycle(9), std::invalid_argument);
  CHECK_THROWS_AS(mochizuki_cocycle(2), std::invalid_argument);
  CHECK_THROWS_AS(mochizuki_cocycle(1), std::invalid_argument);
}

TEST_CASE("verification rejects malformed tables") {
  FiniteQuandle r3 = make_dihedral(3);
  CHECK_THROWS_AS(verify_2cocycle(r3, Coefficients{3}, std::vector<int>(8, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_2cocycle(r3, Coefficients{3}, std::vector<int>(9, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_2cocycle(r3, Coefficients{1}, std::vector<int>(9, 0)),
                  std::invalid_argument);
}

TEST_CASE("cocycle2 create rejects non-cocycles") {
  FiniteQuandle r3 = make_dihedral(3);
  std::vector<int> table(9, 0);
  table[1] = 1;  // phi(0,1) = 1 alone is not a cocycle
  CHECK_THROWS_AS(Cocycle2::create(r3, Coefficients{3}, table), std::invalid_argument);
}
