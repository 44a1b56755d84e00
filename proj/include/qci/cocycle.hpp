#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qci/quandle.hpp"
#include "qci/zn_linear.hpp"

namespace qci {

// Cyclic coefficient group Z_n, written additively.
struct Coefficients {
  int modulus;
};

// Outcome of checking one cocycle condition; a failed check carries the first
// violating tuple in lexicographic scan order and the two sides' values.
struct ConditionCheck {
  bool pass = true;
  std::vector<int> witness;
  int lhs = 0;
  int rhs = 0;
};

struct CocycleReport {
  ConditionCheck vanishing;  // diagonal / degeneracy condition
  ConditionCheck identity;   // cocycle identity
  bool all_pass() const { return vanishing.pass && identity.pass; }
};

// phi : X^2 -> Z_n as a flat row-major table (entry x1*m+x2), checked against
// phi(x,x) = 0 and
//   phi(x1,x3) - phi(x1,x2) = phi(x1*x2, x3) - phi(x1*x3, x2*x3).
CocycleReport verify_2cocycle(const FiniteQuandle& quandle, Coefficients coeff,
                              const std::vector<int>& table);

// theta : X^3 -> Z_n flat at (x1*m+x2)*m+x3, checked against the degeneracy
// theta(x1,x2,x3) = 0 when x1=x2 or x2=x3 and
//   theta(x1,x3,x4) - theta(x1,x2,x4) + theta(x1,x2,x3)
//     = theta(x1*x2,x3,x4) - theta(x1*x3,x2*x3,x4) + theta(x1*x4,x2*x4,x3*x4).
CocycleReport verify_3cocycle(const FiniteQuandle& quandle, Coefficients coeff,
                              const std::vector<int>& table);

class Cocycle2 {
public:
  // Verifies both conditions; throws std::invalid_argument with the witness.
  static Cocycle2 create(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table);

  int order() const { return quandle_.order(); }
  int modulus() const { return coeff_.modulus; }
  const FiniteQuandle& quandle() const { return quandle_; }
  const Coefficients& coefficients() const { return coeff_; }
  const std::vector<int>& values() const { return table_; }

  int at(int x1, int x2) const {
    return table_[static_cast<std::size_t>(x1 * order() + x2)];
  }

private:
  Cocycle2(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table)
      : quandle_(std::move(quandle)), coeff_(coeff), table_(std::move(table)) {}

  FiniteQuandle quandle_;
  Coefficients coeff_;
  std::vector<int> table_;
};

class Cocycle3 {
public:
  static Cocycle3 create(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table);

  int order() const { return quandle_.order(); }
  int modulus() const { return coeff_.modulus; }
  const FiniteQuandle& quandle() const { return quandle_; }
  const Coefficients& coefficients() const { return coeff_; }
  const std::vector<int>& values() const { return table_; }

  int at(int x1, int x2, int x3) const {
    int m = order();
    return table_[static_cast<std::size_t>((x1 * m + x2) * m + x3)];
  }

private:
  friend Cocycle3 mochizuki_cocycle(int p);

  Cocycle3(FiniteQuandle quandle, Coefficients coeff, std::vector<int> table)
      : quandle_(std::move(quandle)), coeff_(coeff), table_(std::move(table)) {}

  FiniteQuandle quandle_;
  Coefficients coeff_;
  std::vector<int> table_;
};

// The Z_4-valued 2-cocycle on Q6 with value 1 on every inverse pair, value 1
// on ten further ordered pairs, two pairs of value 2 and two of value 3, and
// 0 elsewhere.
Cocycle2 q6z4_cocycle();

// The polynomial 3-cocycle on the dihedral quandle R_p with Z_p coefficients:
//   theta_p(x1,x2,x3) = (x1-x2) * ((2*x3-x2)^p + x2^p - 2*x3^p) / p
// evaluated in exact big-integer arithmetic; the bracket is always divisible
// by p, and the division happens before reduction mod p.  Requires odd prime p.
Cocycle3 mochizuki_cocycle(int p);

// Generating description of all 2-cocycles of a quandle with Z_n coefficients,
// obtained by solving the defining linear system over Z_n.
class CocycleEnumeration {
public:
  CocycleEnumeration(FiniteQuandle quandle, Coefficients coeff, ZnKernel kernel)
      : quandle_(std::move(quandle)), coeff_(coeff), kernel_(std::move(kernel)) {}

  const FiniteQuandle& quandle() const { return quandle_; }
  const Coefficients& coefficients() const { return coeff_; }
  const ZnKernel& kernel() const { return kernel_; }

  ZnKernel::Size count() const { return kernel_.size(); }

  // Visits every solution as a flat m*m table, odometer order.
  template <typename F>
  void for_each(F&& visit) const {
    kernel_.for_each_solution(std::forward<F>(visit));
  }

  // All solutions as verified cocycles; throws EnumerationCapExceeded when
  // count() > cap.  An empty result is impossible (the zero cocycle always
  // solves the system) and raises std::logic_error.
  std::vector<Cocycle2> materialize(std::uint64_t cap) const;

private:
  FiniteQuandle quandle_;
  Coefficients coeff_;
  ZnKernel kernel_;
};

struct EnumerationCapExceeded : std::runtime_error {
  EnumerationCapExceeded(ZnKernel::Size count, std::uint64_t cap);
  ZnKernel::Size count;
  std::uint64_t cap;
};

// Builds and solves the 2-cocycle linear system (m^2 unknowns, one equation
// per diagonal entry and per triple).  The quandle order is guarded by
// max_order to keep the m^3-row system at desk scale.
CocycleEnumeration enumerate_2cocycles(const FiniteQuandle& quandle, Coefficients coeff,
                                       int max_order = 24);

}  // namespace qci
