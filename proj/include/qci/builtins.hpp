#pragma once

#include <optional>
#include <string_view>

#include "qci/braid.hpp"
#include "qci/cocycle.hpp"
#include "qci/quandle.hpp"

namespace qci {

// Builtin object names used by the CLI so the standard computations need no
// input files:
//   quandles:  r<p> (dihedral), q6
//   knots:     torus:<l>, sknot:<m>,<n>
//   cocycles:  q6z4 (2-cocycle), mochizuki:<p> (3-cocycle)
// Unknown names return nullopt; a recognized scheme with bad arguments throws.
std::optional<FiniteQuandle> builtin_quandle(std::string_view name);
std::optional<BraidWord> builtin_knot(std::string_view name);
std::optional<Cocycle2> builtin_cocycle2(std::string_view name);
std::optional<Cocycle3> builtin_cocycle3(std::string_view name);

}  // namespace qci
