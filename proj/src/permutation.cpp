#include "qci/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qci {

Perm::Perm(int degree) : images_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image vector is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = compose(*this, p);
    ++k;
  }
  return k;
}

std::string Perm::cycle_string() const {
  std::vector<bool> done(images_.size(), false);
  std::string out;
  for (int start = 0; start < degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) continue;
    out += '(';
    int x = start;
    do {
      done[static_cast<std::size_t>(x)] = true;
      out += std::to_string(x + 1);
      x = images_[static_cast<std::size_t>(x)];
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::from_cycle_string(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (c == ' ' || c == ',') { ++i; continue; }
      if (c < '1' || c > '9') throw std::invalid_argument("bad letter in cycle notation");
      int letter = c - '1';  // single-digit letters only; degree <= 9
      if (letter >= degree) throw std::invalid_argument("cycle letter exceeds degree");
      cycle.push_back(letter);
      ++i;
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (images[static_cast<std::size_t>(from)] != from && cycle.size() > 1)
        throw std::invalid_argument("repeated letter across cycles");
      images[static_cast<std::size_t>(from)] = to;
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("no cycles in cycle notation");
  return Perm(std::move(images));
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) images[static_cast<std::size_t>(x)] = f(g(x));
  return Perm(std::move(images));
}

Perm conjugate(const Perm& g, const Perm& h) {
  return compose(compose(h, g), h.inverse());
}

}  // namespace qci
