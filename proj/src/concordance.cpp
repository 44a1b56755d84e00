#include "qci/concordance.hpp"

#include <stdexcept>

#include "qci/braid.hpp"

namespace qci {

namespace {

void require_same_modulus(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("multiset modulus mismatch: " + std::to_string(a.modulus()) +
                                " vs " + std::to_string(b.modulus()));
}

bool is_odd_prime(int q) {
  if (q < 3 || q % 2 == 0) return false;
  for (int d = 3; 1LL * d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

// Least support value of `left` missing from `right`, if any.
std::optional<int> first_missing(const WeightMultiset& left, const WeightMultiset& right) {
  for (int v : left.support())
    if (right.count(v) == 0) return v;
  return std::nullopt;
}

}  // namespace

bool m_subset(const WeightMultiset& left, const WeightMultiset& right) {
  require_same_modulus(left, right);
  return !first_missing(left, right).has_value();
}

Verdict theorem11_check(const WeightMultiset& upper, const WeightMultiset& lower,
                        std::string upper_name, std::string lower_name, std::string context) {
  require_same_modulus(upper, lower);
  Verdict verdict;
  verdict.theorem = "thm11";
  verdict.upper = std::move(upper_name);
  verdict.lower = std::move(lower_name);
  verdict.context = std::move(context);
  std::optional<int> missing = first_missing(upper, lower);
  if (missing) {
    verdict.obstructed = true;
    verdict.witness = upper;
    verdict.missing_value = missing;
  }
  return verdict;
}

Verdict theorem12_check(const OmegaFamily& upper, const OmegaFamily& lower,
                        std::string upper_name, std::string lower_name, std::string context) {
  if (upper.modulus != lower.modulus)
    throw std::invalid_argument("omega family modulus mismatch");
  Verdict verdict;
  verdict.theorem = "thm12";
  verdict.upper = std::move(upper_name);
  verdict.lower = std::move(lower_name);
  verdict.context = std::move(context);
  for (std::size_t k = 0; k < upper.members.size(); ++k) {
    bool covered = false;
    for (const WeightMultiset& candidate : lower.members)
      if (m_subset(upper.members[k], candidate)) {
        covered = true;
        break;
      }
    if (!covered) {
      verdict.obstructed = true;
      verdict.witness = upper.members[k];
      verdict.witness_member = static_cast<int>(k);
      return verdict;
    }
  }
  return verdict;
}

std::pair<Verdict, Verdict> corollary21_report(int q, int qprime) {
  if (!is_odd_prime(q) || !is_odd_prime(qprime))
    throw std::invalid_argument("corollary21 requires odd primes");
  if (q == qprime) throw std::invalid_argument("corollary21 requires distinct primes");

  auto name = [](int prime) { return "tau^2 T(2," + std::to_string(prime) + ")"; };
  // Each direction uses the invariant whose modulus matches the upper knot:
  // there the upper multiset is nonzero while the lower collapses to zeros.
  Verdict forward = theorem11_check(twist_spun_reference(q),
                                    twist_spun_reference_mismatched(q, qprime), name(q),
                                    name(qprime), "theta_" + std::to_string(q));
  Verdict backward = theorem11_check(twist_spun_reference(qprime),
                                     twist_spun_reference_mismatched(qprime, q), name(qprime),
                                     name(q), "theta_" + std::to_string(qprime));
  return {forward, backward};
}

std::pair<Verdict, Verdict> corollary21_mirror_report(int q) {
  if (!is_odd_prime(q)) throw std::invalid_argument("corollary21 mirror requires an odd prime");
  WeightMultiset reference = twist_spun_reference(q);
  WeightMultiset reversed = negate_multiset(reference);
  std::string name = "tau^2 T(2," + std::to_string(q) + ")";
  std::string context = "theta_" + std::to_string(q);
  Verdict forward = theorem11_check(reference, reversed, name, "-" + name, context);
  Verdict backward = theorem11_check(reversed, reference, "-" + name, name, context);
  return {forward, backward};
}

Verdict corollary43_report(int l, int m, int n, int r, int s) {
  if (r < 0 || r % 4 != 0 || s < 0 || s % 4 != 0)
    throw std::invalid_argument("corollary43 requires r,s >= 0 with r,s = 0 (mod 4)");
  for (int v : {l, m, n})
    if (v < 3 || v % 6 != 3 || v > 21)
      throw std::invalid_argument(
          "corollary43 requires l,m,n = 3 (mod 6) within the desk-scale bound 21");

  FiniteQuandle q6 = make_q6();
  Cocycle2 phi = q6z4_cocycle();
  OmegaFamily upper = omega_family(torus_braid(l), q6, phi, r);
  OmegaFamily lower = omega_family(s_knot_braid(m, n), q6, phi, s);
  std::string upper_name = "sigma^" + std::to_string(r) + " T(2," + std::to_string(l) + ")";
  std::string lower_name =
      "sigma^" + std::to_string(s) + " S(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return theorem12_check(upper, lower, upper_name, lower_name, "q6 cocycle over Z_4");
}

}  // namespace qci
