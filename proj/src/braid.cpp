#include "qci/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qci {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (const BraidLetter& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw std::invalid_argument("generator s" + std::to_string(l.index) +
                                  " out of range for " + std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

std::vector<int> BraidWord::closure_permutation() const {
  std::vector<int> position(static_cast<std::size_t>(strands_));
  for (int i = 0; i < strands_; ++i) position[static_cast<std::size_t>(i)] = i;
  for (const BraidLetter& l : letters_) {
    for (int& p : position) {
      if (p == l.index - 1)
        p = l.index;
      else if (p == l.index)
        p = l.index - 1;
    }
  }
  return position;
}

bool BraidWord::closure_is_knot() const {
  std::vector<int> perm = closure_permutation();
  int length = 1;
  int x = perm[0];
  while (x != 0) {
    x = perm[static_cast<std::size_t>(x)];
    ++length;
    if (length > strands_) return false;  // unreachable for a permutation
  }
  return length == strands_;
}

BraidWord BraidWord::conjugated_by(BraidLetter g) const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size() + 2);
  out.push_back(g);
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.push_back(BraidLetter{g.index, -g.sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::mirror() const {
  std::vector<BraidLetter> out = letters_;
  for (BraidLetter& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidParseError::BraidParseError(const std::string& message, std::size_t position_)
    : std::invalid_argument(message + " (at position " + std::to_string(position_) + ")"),
      position(position_) {}

namespace {

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

// Parses an optionally signed integer starting at pos; advances pos.
long long parse_int(std::string_view text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos || pos == start)
    throw BraidParseError(std::string("expected ") + what, start);
  return value;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = skip_space(text, 0);
  long long strands = parse_int(text, pos, "strand count");
  if (strands < 1 || strands > 64) throw BraidParseError("strand count out of range", 0);
  pos = skip_space(text, pos);
  if (pos >= text.size() || text[pos] != ':')
    throw BraidParseError("expected ':' after strand count", pos);
  ++pos;

  std::vector<BraidLetter> letters;
  while (true) {
    pos = skip_space(text, pos);
    if (pos >= text.size()) break;
    std::size_t token_start = pos;
    if (text[pos] != 's') throw BraidParseError("expected generator token like s1", pos);
    ++pos;
    long long index = parse_int(text, pos, "generator index");
    if (index < 1 || index > strands - 1)
      throw BraidParseError("generator s" + std::to_string(index) + " out of range for " +
                                std::to_string(strands) + " strands",
                            token_start);
    long long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = parse_int(text, pos, "power");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw BraidParseError("malformed token", pos);
    if (std::llabs(power) > 4096) throw BraidParseError("power too large", token_start);
    int sign = power >= 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(power); ++i)
      letters.push_back(BraidLetter{static_cast<int>(index), sign});
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

BraidWord torus_braid(int l) {
  if (l < 1 || l % 2 == 0)
    throw std::invalid_argument("torus braid needs odd l >= 1 (even l closes to a link)");
  return BraidWord(2, std::vector<BraidLetter>(static_cast<std::size_t>(l), BraidLetter{1, 1}));
}

BraidWord s_knot_braid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("s-knot braid needs m,n >= 1");
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(m + n + 2));
  for (int i = 0; i < m; ++i) letters.push_back(BraidLetter{1, 1});
  letters.push_back(BraidLetter{2, -1});
  for (int i = 0; i < n; ++i) letters.push_back(BraidLetter{1, 1});
  letters.push_back(BraidLetter{2, -1});
  BraidWord braid(3, std::move(letters));
  if (!braid.closure_is_knot())
    throw std::invalid_argument("s-knot braid closure is not a knot for m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  return braid;
}

std::string to_string(const BraidWord& braid) {
  std::string out = std::to_string(braid.strands()) + ":";
  std::size_t i = 0;
  const auto& letters = braid.letters();
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long long run = static_cast<long long>(j - i);
    out += " s" + std::to_string(letters[i].index);
    long long power = letters[i].sign * run;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace qci
