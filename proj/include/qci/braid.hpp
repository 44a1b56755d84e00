#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qci {

// One letter of a braid word: generator index i (1 <= i <= strands-1) with
// sign +1 or -1.
struct BraidLetter {
  int index;
  int sign;

  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
public:
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  // Image of each top position at the bottom of the braid.
  std::vector<int> closure_permutation() const;
  // True when the closure has a single component.
  bool closure_is_knot() const;

  // g . w . g^{-1}: Markov conjugation, the closure is unchanged.
  BraidWord conjugated_by(BraidLetter g) const;
  // All crossing signs flipped.
  BraidWord mirror() const;

  bool operator==(const BraidWord&) const = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

struct BraidParseError : std::invalid_argument {
  BraidParseError(const std::string& message, std::size_t position);
  std::size_t position;
};

// Grammar: "<strands>: <letter>*" where a letter is s<i> or s<i>^<e>; a
// negative power expands to |e| inverse letters, e.g. "3: s1^3 s2^-1".
BraidWord parse_braid(std::string_view text);

// The 2-strand braid with l positive half twists; its closure is the (2,l)
// torus knot.  Requires odd l >= 1 so the closure is a knot.
BraidWord torus_braid(int l);

// The 3-strand braid s1^m s2^-1 s1^n s2^-1; closure S(m,n).  Requires odd
// m,n >= 1 (checked via the closure permutation).
BraidWord s_knot_braid(int m, int n);

std::string to_string(const BraidWord& braid);

}  // namespace qci
