#include "qci/cocycle.hpp"

#include <stdexcept>
#include <string>

namespace qci {

namespace {

void require_modulus(Coefficients coeff) {
  if (coeff.modulus < 2) throw std::invalid_argument("coefficient modulus must be >= 2");
}

void require_values(const std::vector<int>& table, std::size_t expected, int modulus) {
  if (table.size() != expected)
    throw std::invalid_argument("cocycle table size does not match quandle order");
  for (int v : table)
    if (v < 0 || v >= modulus)
      throw std::invalid_argument("cocycle value out of range for modulus " +
                                  std::to_string(modulus));
}

std::string witness_string(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace

CocycleReport verify_2cocycle(const FiniteQuandle& quandle, Coefficients coeff,
                              const std::vector<int>& table) {
  require_modulus(coeff);
  const int m = quandle.order();
  const int n = coeff.modulus;
  require_values(table, static_cast<std::size_t>(m) * static_cast<std::size_t>(m), n);
  auto phi = [&](int a, int b) { return table[static_cast<std::size_t>(a * m + b)]; };

  CocycleReport report;
  for (int x = 0; x < m; ++x)
    if (phi(x, x) != 0) {
      report.vanishing = {false, {x, x}, phi(x, x), 0};
      break;
    }

  for (int x1 = 0; x1 < m && report.identity.pass; ++x1)
    for (int x2 = 0; x2 < m && report.identity.pass; ++x2)
      for (int x3 = 0; x3 < m; ++x3) {
        int lhs = ((phi(x1, x3) - phi(x1, x2)) % n + n) % n;
        int rhs = ((phi(quandle.op(x1, x2), x3) -
                    phi(quandle.op(x1, x3), quandle.op(x2, x3))) % n + n) % n;
        if (lhs != rhs) {
          report.identity = {false, {x1, x2, x3}, lhs, rhs};
          break;
        }
      }
  return report;
}

CocycleReport verify_3cocycle(const FiniteQuandle& quandle, Coefficients coeff,
                              const std::vector<int>& table) {
  require_modulus(coeff);
  const int m = quandle.order();
  const int n = coeff.modulus;
  require_values(table,
                 static_cast<std::size_t>(m) * static_cast<std::size_t>(m) *
                     static_cast<std::size_t>(m),
                 n);
  auto theta = [&](int a, int b, int c) {
    return table[static_cast<std::size_t>((a * m + b) * m + c)];
  };

  CocycleReport report;
  for (int x1 = 0; x1 < m && report.vanishing.pass; ++x1)
    for (int x2 = 0; x2 < m && report.vanishing.pass; ++x2)
      for (int x3 = 0; x3 < m; ++x3) {
        if (x1 != x2 && x2 != x3) continue;
        if (theta(x1, x2, x3) != 0) {
          report.vanishing = {false, {x1, x2, x3}, theta(x1, x2, x3), 0};
          break;
        }
      }

  for (int x1 = 0; x1 < m && report.identity.pass; ++x1)
    for (int x2 = 0; x2 < m && report.identity.pass; ++x2)
      for (int x3 = 0; x3 < m && report.identity.pass; ++x3)
        for (int x4 = 0; x4 < m; ++x4) {
          int lhs = ((theta(x1, x3, x4) - theta(x1, x2, x4) + theta(x1, x2, x3)) % n + n) % n;
          int rhs = ((theta(quandle.op(x1, x2), x3, x4) -
                      theta(quandle.op(x1, x3), quandle.op(x2, x3), x4) +
                      theta(quandle.op(x1, x4), quandle.op(x2, x4), quandle.op(x3, x4))) %
                         n +
                     n) %
                    n;
          if (lhs != rhs) {
            report.identity = {false, {x1, x2, x3, x4}, lhs, rhs};
            break;
          }
        }
  return report;
}

Cocycle2 Cocycle2::create(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table) {
  CocycleReport report = verify_2cocycle(quandle, coeff, table);
  if (!report.vanishing.pass)
    throw std::invalid_argument("2-cocycle diagonal condition fails at " +
                                witness_string(report.vanishing.witness));
  if (!report.identity.pass)
    throw std::invalid_argument("2-cocycle identity fails at " +
                                witness_string(report.identity.witness));
  return Cocycle2(std::move(quandle), coeff, std::move(table));
}

Cocycle3 Cocycle3::create(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table) {
  CocycleReport report = verify_3cocycle(quandle, coeff, table);
  if (!report.vanishing.pass)
    throw std::invalid_argument("3-cocycle degeneracy fails at " +
                                witness_string(report.vanishing.witness));
  if (!report.identity.pass)
    throw std::invalid_argument("3-cocycle identity fails at " +
                                witness_string(report.identity.witness));
  return Cocycle3(std::move(quandle), coeff, std::move(table));
}

Cocycle2 q6z4_cocycle() {
  FiniteQuandle q6 = make_q6();
  const int m = 6;
  std::vector<int> table(static_cast<std::size_t>(m * m), 0);
  auto set = [&](int a, int b, int v) {  // 1-based element numbering
    table[static_cast<std::size_t>((a - 1) * m + (b - 1))] = v;
  };
  for (int a = 0; a < m; ++a) table[static_cast<std::size_t>(a * m + q6.inverse_of(a))] = 1;
  for (auto [a, b] : {std::pair{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 5},
                      {5, 1}, {5, 6}, {6, 1}, {6, 2}, {6, 5}})
    set(a, b, 1);
  set(1, 5, 2);
  set(5, 3, 2);
  set(1, 6, 3);
  set(3, 2, 3);
  return Cocycle2::create(std::move(q6), Coefficients{4}, std::move(table));
}

EnumerationCapExceeded::EnumerationCapExceeded(ZnKernel::Size count_, std::uint64_t cap_)
    : std::runtime_error("cocycle solution count " +
                         (count_.overflow ? std::string("(overflow)")
                                          : std::to_string(count_.value)) +
                         " exceeds cap " + std::to_string(cap_)),
      count(count_),
      cap(cap_) {}

std::vector<Cocycle2> CocycleEnumeration::materialize(std::uint64_t cap) const {
  ZnKernel::Size total = count();
  if (total.exceeds(cap)) throw EnumerationCapExceeded(total, cap);
  std::vector<Cocycle2> out;
  out.reserve(static_cast<std::size_t>(total.value));
  for_each([&](const std::vector<int>& table) {
    out.push_back(Cocycle2::create(quandle_, coeff_, table));
  });
  if (out.empty())
    throw std::logic_error("cocycle enumeration returned no solutions; the zero cocycle must exist");
  return out;
}

}  // namespace qci
