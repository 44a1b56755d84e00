#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qci {

// Permutation of {0,...,m-1}, stored as the image vector: images()[x] is the
// image of x.
class Perm {
public:
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // throws if not a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  // Cycle notation over 1-based letters, e.g. "(1234)" maps 1->2,2->3,3->4,4->1.
  // Fixed points are omitted; the identity prints as "()".
  std::string cycle_string() const;
  static Perm from_cycle_string(std::string_view text, int degree);

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

// (compose(f, g))(x) = f(g(x))
Perm compose(const Perm& f, const Perm& g);

// Conjugate of g by h in the letter-replacement sense: the cycle of the result
// is the cycle of g with every letter x replaced by h(x).  Equals h.g.h^{-1}
// under left-action composition.
Perm conjugate(const Perm& g, const Perm& h);

}  // namespace qci
