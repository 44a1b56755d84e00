#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "qci/cocycle.hpp"

namespace qci {

namespace {

using boost::multiprecision::cpp_int;

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; 1LL * d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

cpp_int int_pow(cpp_int base, int exp) {
  cpp_int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Cocycle3 mochizuki_cocycle(int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("mochizuki cocycle requires an odd prime");
  FiniteQuandle quandle = make_dihedral(p);
  const int m = p;
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m) *
                         static_cast<std::size_t>(m));
  for (int x2 = 0; x2 < m; ++x2)
    for (int x3 = 0; x3 < m; ++x3) {
      cpp_int bracket =
          int_pow(cpp_int(2 * x3 - x2), p) + int_pow(cpp_int(x2), p) - 2 * int_pow(cpp_int(x3), p);
      if (bracket % p != 0)
        throw std::logic_error("mochizuki bracket not divisible by p");
      cpp_int quotient = bracket / p;
      for (int x1 = 0; x1 < m; ++x1) {
        cpp_int value = ((x1 - x2) * quotient) % p;
        if (value < 0) value += p;
        table[static_cast<std::size_t>((x1 * m + x2) * m + x3)] = static_cast<int>(value);
      }
    }
  return Cocycle3(std::move(quandle), Coefficients{p}, std::move(table));
}

}  // namespace qci
