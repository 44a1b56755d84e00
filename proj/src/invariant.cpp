#include "qci/invariant.hpp"

#include <stdexcept>
#include <string>

namespace qci {

namespace {

void require_same_quandle(const FiniteQuandle& quandle, const Cocycle2& phi) {
  if (!(phi.quandle() == quandle))
    throw std::invalid_argument("cocycle is defined on a different quandle");
}

bool is_odd_prime(int q) {
  if (q < 3 || q % 2 == 0) return false;
  for (int d = 3; 1LL * d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

int crossing_weight(const ClosedDiagram& diagram, std::size_t crossing_index,
                    const Coloring& coloring, const Cocycle2& phi) {
  if (crossing_index >= diagram.crossings().size())
    throw std::invalid_argument("crossing index out of range");
  const std::vector<CrossingColor> colors = crossing_colors(diagram, phi.quandle(), coloring);
  const CrossingColor& c = colors[crossing_index];
  const int n = phi.modulus();
  return ((c.sign * phi.at(c.under, c.over)) % n + n) % n;
}

int coloring_weight(const ClosedDiagram& diagram, const Coloring& coloring, const Cocycle2& phi) {
  const int n = phi.modulus();
  long long sum = 0;
  for (const CrossingColor& c : crossing_colors(diagram, phi.quandle(), coloring))
    sum += c.sign * phi.at(c.under, c.over);
  return static_cast<int>(((sum % n) + n) % n);
}

WeightMultiset phi_invariant(const BraidWord& braid, const FiniteQuandle& quandle,
                             const Cocycle2& phi, int jobs) {
  require_same_quandle(quandle, phi);
  ClosedDiagram diagram(braid);
  WeightMultiset result(phi.modulus());
  for (const Coloring& coloring : enumerate_colorings(diagram, quandle, jobs))
    result.add(coloring_weight(diagram, coloring, phi));
  return result;
}

OmegaFamily omega_family(const BraidWord& braid, const FiniteQuandle& quandle,
                         const Cocycle2& phi, int r, int jobs) {
  require_same_quandle(quandle, phi);
  if (r < 0) throw std::invalid_argument("twist count r must be non-negative");
  const int type = quandle_type(quandle);
  if (r % type != 0)
    throw std::invalid_argument("unsupported twist count r=" + std::to_string(r) +
                                ": must be a multiple of the quandle type " +
                                std::to_string(type));

  WeightMultiset base = phi_invariant(braid, quandle, phi, jobs);
  OmegaFamily family{phi.modulus(), base, {}, true};
  family.members.reserve(static_cast<std::size_t>(phi.modulus()));
  for (int k = 0; k < phi.modulus(); ++k) family.members.push_back(scale_multiset(k, base));
  return family;
}

WeightMultiset twist_spun_reference(int q) {
  if (!is_odd_prime(q)) throw std::invalid_argument("twist-spun reference requires an odd prime");
  WeightMultiset out(q);
  for (int k = 0; k < q; ++k) out.add(-2 * k * k, q);
  return out;
}

WeightMultiset twist_spun_reference_mismatched(int p, int q) {
  if (!is_odd_prime(p) || !is_odd_prime(q))
    throw std::invalid_argument("twist-spun reference requires odd primes");
  if (p == q)
    throw std::invalid_argument("mismatched reference requires distinct primes");
  return zero_multiset(p, p);
}

std::vector<int> residue_support(int q) {
  return twist_spun_reference(q).support();
}

}  // namespace qci
