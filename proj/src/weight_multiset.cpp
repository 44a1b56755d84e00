#include "qci/weight_multiset.hpp"

#include <stdexcept>

namespace qci {

WeightMultiset::WeightMultiset(int modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("multiset modulus must be >= 2");
}

void WeightMultiset::add(int value, std::int64_t count) {
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  if (count == 0) return;
  int reduced = ((value % modulus_) + modulus_) % modulus_;
  counts_[reduced] += count;
}

std::int64_t WeightMultiset::count(int value) const {
  int reduced = ((value % modulus_) + modulus_) % modulus_;
  auto it = counts_.find(reduced);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::total() const {
  std::int64_t sum = 0;
  for (const auto& [value, count] : counts_) sum += count;
  return sum;
}

std::vector<int> WeightMultiset::support() const {
  std::vector<int> out;
  out.reserve(counts_.size());
  for (const auto& [value, count] : counts_) out.push_back(value);
  return out;
}

std::string WeightMultiset::to_string() const {
  if (counts_.empty()) return "-";
  std::string out;
  for (const auto& [value, count] : counts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value) + ":" + std::to_string(count);
  }
  return out;
}

WeightMultiset negate_multiset(const WeightMultiset& m) {
  WeightMultiset out(m.modulus());
  for (const auto& [value, count] : m.counts()) out.add(-value, count);
  return out;
}

WeightMultiset scale_multiset(int k, const WeightMultiset& m) {
  WeightMultiset out(m.modulus());
  for (const auto& [value, count] : m.counts()) {
    long long scaled = 1LL * k * value;
    out.add(static_cast<int>(((scaled % m.modulus()) + m.modulus()) % m.modulus()), count);
  }
  return out;
}

WeightMultiset zero_multiset(int modulus, std::int64_t count) {
  WeightMultiset out(modulus);
  out.add(0, count);
  return out;
}

}  // namespace qci
