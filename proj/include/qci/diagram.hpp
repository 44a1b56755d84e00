#pragma once

#include <vector>

#include "qci/braid.hpp"
#include "qci/quandle.hpp"

namespace qci {

// One crossing of the closed diagram, in word order.
struct Crossing {
  int position;   // index into the braid word
  int generator;  // 1-based generator index
  int sign;       // +1 or -1
};

// A braid word whose closure is a knot (the closure permutation is a single
// cycle; bottom position i is joined back to top position i).
class ClosedDiagram {
public:
  explicit ClosedDiagram(BraidWord braid);

  const BraidWord& braid() const { return braid_; }
  int strands() const { return braid_.strands(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

private:
  BraidWord braid_;
  std::vector<Crossing> crossings_;
};

// A coloring is determined by the colors of the k top strands; the rest of
// the arc coloring is the propagation of this tuple through the word.
struct Coloring {
  std::vector<int> top;

  bool operator==(const Coloring&) const = default;
};

// The recorded color pair (under, over) and sign at one crossing.
struct CrossingColor {
  int under;
  int over;
  int sign;
};

// Pushes a top tuple through the word.  A positive letter sends the adjacent
// pair (a,b) to (b, a*b); a negative letter sends it to (z, a) with z the
// unique element satisfying z*a = b.  The two maps are mutually inverse.
std::vector<int> propagate_top_tuple(const BraidWord& braid, const FiniteQuandle& quandle,
                                     const std::vector<int>& top);

// The color pair recorded at each crossing: (under-incoming, over) with sign
// +1 at a positive letter, (under-outgoing, over) with sign -1 at a negative
// letter; the pairs feed the Boltzmann weights.
std::vector<CrossingColor> crossing_colors(const ClosedDiagram& diagram,
                                           const FiniteQuandle& quandle, const Coloring& coloring);

// All valid colorings, in lexicographic order of the top tuple.  jobs > 1
// partitions the tuple space into contiguous chunks evaluated concurrently;
// the result order does not depend on jobs.
std::vector<Coloring> enumerate_colorings(const ClosedDiagram& diagram,
                                          const FiniteQuandle& quandle, int jobs = 1);

// Sorted distinct quandle elements appearing on any arc under the coloring.
std::vector<int> colors_used(const ClosedDiagram& diagram, const FiniteQuandle& quandle,
                             const Coloring& coloring);

// True iff x(*y)^r = x for every ordered pair (x,y) of colors appearing in
// the coloring; r = 0 holds vacuously.
bool check_type_r_extension(const ClosedDiagram& diagram, const Coloring& coloring,
                            const FiniteQuandle& quandle, int r);

}  // namespace qci
