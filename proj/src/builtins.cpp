#include "qci/builtins.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace qci {

namespace {

std::optional<int> parse_number(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<FiniteQuandle> builtin_quandle(std::string_view name) {
  if (name == "q6") return make_q6();
  if (name.size() >= 2 && name[0] == 'r') {
    auto p = parse_number(name.substr(1));
    if (p) return make_dihedral(*p);
  }
  return std::nullopt;
}

std::optional<BraidWord> builtin_knot(std::string_view name) {
  constexpr std::string_view torus_prefix = "torus:";
  constexpr std::string_view sknot_prefix = "sknot:";
  if (name.starts_with(torus_prefix)) {
    auto l = parse_number(name.substr(torus_prefix.size()));
    if (!l) throw std::invalid_argument("torus:<l> needs an integer l");
    return torus_braid(*l);
  }
  if (name.starts_with(sknot_prefix)) {
    std::string_view rest = name.substr(sknot_prefix.size());
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("sknot:<m>,<n> needs two integers");
    auto m = parse_number(rest.substr(0, comma));
    auto n = parse_number(rest.substr(comma + 1));
    if (!m || !n) throw std::invalid_argument("sknot:<m>,<n> needs two integers");
    return s_knot_braid(*m, *n);
  }
  return std::nullopt;
}

std::optional<Cocycle2> builtin_cocycle2(std::string_view name) {
  if (name == "q6z4") return q6z4_cocycle();
  return std::nullopt;
}

std::optional<Cocycle3> builtin_cocycle3(std::string_view name) {
  constexpr std::string_view prefix = "mochizuki:";
  if (name.starts_with(prefix)) {
    auto p = parse_number(name.substr(prefix.size()));
    if (!p) throw std::invalid_argument("mochizuki:<p> needs an integer p");
    return mochizuki_cocycle(*p);
  }
  return std::nullopt;
}

}  // namespace qci
