#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qci/permutation.hpp"

namespace qci {

using QuandleTable = std::vector<std::vector<int>>;

// Result of scanning a raw operation table against the three quandle axioms.
// Each failed axiom carries the first violating tuple in scan order.
struct AxiomReport {
  struct Idempotency {
    bool pass = true;
    int element = -1;  // a with a*a != a
  };
  struct RightInvertibility {
    bool pass = true;
    int column = -1;  // b whose column map a -> a*b is not a permutation
    int first = -1;   // witnesses: first*b == second*b
    int second = -1;
  };
  struct SelfDistributivity {
    bool pass = true;
    int a = -1, b = -1, c = -1;  // (a*b)*c != (a*c)*(b*c)
  };

  Idempotency idempotency;
  RightInvertibility right_invertibility;
  SelfDistributivity self_distributivity;

  bool all_pass() const {
    return idempotency.pass && right_invertibility.pass && self_distributivity.pass;
  }
};

// Checks that the table is square with entries in range, then scans the three
// axioms.  Malformed tables are an input error (std::invalid_argument), not an
// axiom failure.
AxiomReport verify_quandle_axioms(const QuandleTable& table);

// A finite quandle as an order-n operation table.  Instances are verified at
// construction and immutable afterwards; elements are 0-based indices, labels
// are display-only.
class FiniteQuandle {
public:
  // Verifies all axioms; throws std::invalid_argument with the failing axiom.
  static FiniteQuandle from_table(QuandleTable table,
                                  std::vector<std::string> labels = {},
                                  std::optional<std::vector<int>> inverse_map = std::nullopt);

  int order() const { return order_; }

  // a*b
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }

  // Right inverse: the unique z with z*b = a.
  int op_inv(int a, int b) const { return inv_table_[static_cast<std::size_t>(a * order_ + b)]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::optional<int> index_of_label(const std::string& label) const;

  bool has_inverse_map() const { return !inverse_map_.empty(); }
  int inverse_of(int a) const { return inverse_map_[static_cast<std::size_t>(a)]; }

  QuandleTable table() const;  // row-major copy, rows a, columns b

  bool operator==(const FiniteQuandle& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

private:
  FiniteQuandle() = default;

  int order_ = 0;
  std::vector<int> table_;      // a*b at a*order_+b
  std::vector<int> inv_table_;  // z with z*b = a, at a*order_+b
  std::vector<std::string> labels_;
  std::vector<int> inverse_map_;  // empty when absent
};

// Dihedral quandle R_p on {0,...,p-1} with a*b = 2b-a (mod p).  Requires p >= 2.
FiniteQuandle make_dihedral(int p);

// The conjugation quandle on the six 4-cycles in the symmetric group on four
// letters, with cycle-notation labels and the inverse pairing (0,3),(1,4),(2,5).
FiniteQuandle make_q6();

// Conjugation quandle on an explicit set of permutations: g*h has the cycle of
// g with letters replaced through h.  The set must be closed under mutual
// conjugation; the error message names the first escaping pair.
FiniteQuandle make_conjugation_quandle(const std::vector<Perm>& elements);

// Least s >= 1 with x(*y)^s = x for all x,y: the lcm of the orders of the
// column permutations.  Finite quandles always have one.
int quandle_type(const FiniteQuandle& quandle);

}  // namespace qci
