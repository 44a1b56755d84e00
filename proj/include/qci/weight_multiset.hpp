#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qci {

// Finite multiset over Z_n: value -> multiplicity.  Values are kept reduced
// to {0,...,n-1}; absent values have multiplicity zero.
class WeightMultiset {
public:
  explicit WeightMultiset(int modulus);

  int modulus() const { return modulus_; }

  // Adds `count` copies of value (any integer; reduced mod n).
  void add(int value, std::int64_t count = 1);

  std::int64_t count(int value) const;
  std::int64_t total() const;
  bool empty() const { return counts_.empty(); }

  // Sorted distinct values with positive multiplicity.
  std::vector<int> support() const;

  const std::map<int, std::int64_t>& counts() const { return counts_; }

  bool operator==(const WeightMultiset&) const = default;

  // "v:c v:c ..." sorted by value; empty multiset prints as "-".
  std::string to_string() const;

private:
  int modulus_;
  std::map<int, std::int64_t> counts_;
};

// Values mapped v -> -v mod n, multiplicities preserved.
WeightMultiset negate_multiset(const WeightMultiset& m);

// Values mapped v -> k*v mod n; colliding values accumulate their counts.
WeightMultiset scale_multiset(int k, const WeightMultiset& m);

// {0 x count}: the all-zero multiset of the given size.
WeightMultiset zero_multiset(int modulus, std::int64_t count);

}  // namespace qci
