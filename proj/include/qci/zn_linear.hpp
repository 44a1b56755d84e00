#pragma once

#include <cstdint>
#include <vector>

namespace qci {

// Solution set of a homogeneous linear system A x = 0 over Z_n, n >= 2 and
// possibly composite.  Computed by integer diagonalization (row and column
// operations with mod-n normalization), which is sound in the presence of
// zero divisors; pivot ties are broken by lowest row index, then column.
//
// Solutions are exactly the sums  sum_i t_i * generator[i].column  (mod n)
// with 0 <= t_i < generator[i].count, each combination giving a distinct
// vector.
class ZnKernel {
public:
  struct Generator {
    std::vector<int> column;  // length = unknowns, entries in [0, n)
    int count;                // > 1
  };

  // Total number of solutions, saturating: overflow means > 2^64-1.
  struct Size {
    bool overflow = false;
    std::uint64_t value = 0;

    bool exceeds(std::uint64_t cap) const { return overflow || value > cap; }
  };

  int modulus = 0;
  int unknowns = 0;
  std::vector<Generator> generators;

  Size size() const;

  // Visits every solution once, in odometer order over the generator
  // multipliers.  The visited reference is reused between calls.
  template <typename F>
  void for_each_solution(F&& visit) const {
    std::vector<int> digits(generators.size(), 0);
    std::vector<int> current(static_cast<std::size_t>(unknowns), 0);
    while (true) {
      std::fill(current.begin(), current.end(), 0);
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (digits[i] == 0) continue;
        const auto& column = generators[i].column;
        for (std::size_t j = 0; j < column.size(); ++j)
          current[j] = static_cast<int>((current[j] + 1LL * digits[i] * column[j]) % modulus);
      }
      visit(static_cast<const std::vector<int>&>(current));

      std::size_t pos = 0;
      while (pos < digits.size()) {
        if (++digits[pos] < generators[pos].count) break;
        digits[pos] = 0;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
  }
};

// rows: coefficient rows of length `unknowns` (any integers; reduced mod n).
ZnKernel solve_homogeneous_mod(const std::vector<std::vector<int>>& rows, int unknowns,
                               int modulus);

}  // namespace qci
