#include <set>
#include <stdexcept>

#include "qci/cocycle.hpp"

namespace qci {

CocycleEnumeration enumerate_2cocycles(const FiniteQuandle& quandle, Coefficients coeff,
                                       int max_order) {
  if (coeff.modulus < 2) throw std::invalid_argument("coefficient modulus must be >= 2");
  const int m = quandle.order();
  if (m > max_order)
    throw std::invalid_argument("quandle order " + std::to_string(m) +
                                " exceeds enumeration guard " + std::to_string(max_order));
  const int unknowns = m * m;
  auto idx = [m](int a, int b) { return static_cast<std::size_t>(a * m + b); };

  // One pinned-to-zero equation per diagonal entry, one accumulated row per
  // triple; zero and duplicate rows dropped before solving.
  std::set<std::vector<int>> rows;
  for (int x = 0; x < m; ++x) {
    std::vector<int> row(static_cast<std::size_t>(unknowns), 0);
    row[idx(x, x)] = 1;
    rows.insert(std::move(row));
  }
  for (int x1 = 0; x1 < m; ++x1)
    for (int x2 = 0; x2 < m; ++x2)
      for (int x3 = 0; x3 < m; ++x3) {
        std::vector<int> row(static_cast<std::size_t>(unknowns), 0);
        row[idx(x1, x3)] += 1;
        row[idx(x1, x2)] -= 1;
        row[idx(quandle.op(x1, x2), x3)] -= 1;
        row[idx(quandle.op(x1, x3), quandle.op(x2, x3))] += 1;
        bool nonzero = false;
        for (int v : row)
          if (v != 0) {
            nonzero = true;
            break;
          }
        if (nonzero) rows.insert(std::move(row));
      }

  std::vector<std::vector<int>> system(rows.begin(), rows.end());
  ZnKernel kernel = solve_homogeneous_mod(system, unknowns, coeff.modulus);
  return CocycleEnumeration(quandle, coeff, std::move(kernel));
}

}  // namespace qci
