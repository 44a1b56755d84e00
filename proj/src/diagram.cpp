#include "qci/diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace qci {

ClosedDiagram::ClosedDiagram(BraidWord braid) : braid_(std::move(braid)) {
  if (!braid_.closure_is_knot())
    throw std::invalid_argument(
        "braid closure is not a knot (closure permutation is not a single cycle)");
  crossings_.reserve(braid_.length());
  for (std::size_t i = 0; i < braid_.length(); ++i) {
    const BraidLetter& l = braid_.letters()[i];
    crossings_.push_back(Crossing{static_cast<int>(i), l.index, l.sign});
  }
}

std::vector<int> propagate_top_tuple(const BraidWord& braid, const FiniteQuandle& quandle,
                                     const std::vector<int>& top) {
  if (static_cast<int>(top.size()) != braid.strands())
    throw std::invalid_argument("top tuple length does not match strand count");
  std::vector<int> t = top;
  for (const BraidLetter& l : braid.letters()) {
    const std::size_t j = static_cast<std::size_t>(l.index - 1);
    const int a = t[j], b = t[j + 1];
    if (l.sign > 0) {
      t[j] = b;
      t[j + 1] = quandle.op(a, b);
    } else {
      t[j] = quandle.op_inv(b, a);
      t[j + 1] = a;
    }
  }
  return t;
}

std::vector<CrossingColor> crossing_colors(const ClosedDiagram& diagram,
                                           const FiniteQuandle& quandle,
                                           const Coloring& coloring) {
  std::vector<int> t = coloring.top;
  if (static_cast<int>(t.size()) != diagram.strands())
    throw std::invalid_argument("coloring length does not match strand count");
  std::vector<CrossingColor> out;
  out.reserve(diagram.crossings().size());
  for (const BraidLetter& l : diagram.braid().letters()) {
    const std::size_t j = static_cast<std::size_t>(l.index - 1);
    const int a = t[j], b = t[j + 1];
    if (l.sign > 0) {
      out.push_back(CrossingColor{a, b, +1});
      t[j] = b;
      t[j + 1] = quandle.op(a, b);
    } else {
      const int z = quandle.op_inv(b, a);  // under-outgoing color
      out.push_back(CrossingColor{z, a, -1});
      t[j] = z;
      t[j + 1] = a;
    }
  }
  return out;
}

namespace {

std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > (1ULL << 32)) throw std::invalid_argument("coloring enumeration too large");
    result *= static_cast<std::uint64_t>(base);
  }
  return result;
}

std::vector<int> tuple_at(std::uint64_t index, int order, int strands) {
  std::vector<int> t(static_cast<std::size_t>(strands));
  for (int pos = strands - 1; pos >= 0; --pos) {
    t[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::uint64_t>(order));
    index /= static_cast<std::uint64_t>(order);
  }
  return t;
}

void collect_range(const ClosedDiagram& diagram, const FiniteQuandle& quandle,
                   std::uint64_t begin, std::uint64_t end, std::vector<Coloring>& out) {
  const int k = diagram.strands();
  for (std::uint64_t i = begin; i < end; ++i) {
    std::vector<int> top = tuple_at(i, quandle.order(), k);
    if (propagate_top_tuple(diagram.braid(), quandle, top) == top)
      out.push_back(Coloring{std::move(top)});
  }
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const ClosedDiagram& diagram,
                                          const FiniteQuandle& quandle, int jobs) {
  const std::uint64_t total = checked_pow(quandle.order(), diagram.strands());
  if (jobs < 1) jobs = 1;
  if (jobs > 256) jobs = 256;
  if (static_cast<std::uint64_t>(jobs) > total) jobs = static_cast<int>(total);

  if (jobs == 1) {
    std::vector<Coloring> out;
    collect_range(diagram, quandle, 0, total, out);
    return out;
  }

  std::vector<std::vector<Coloring>> chunks(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
    workers.emplace_back([&, w, begin, end] {
      collect_range(diagram, quandle, begin, end, chunks[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : workers) t.join();

  std::vector<Coloring> out;
  for (auto& chunk : chunks)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

std::vector<int> colors_used(const ClosedDiagram& diagram, const FiniteQuandle& quandle,
                             const Coloring& coloring) {
  std::set<int> used(coloring.top.begin(), coloring.top.end());
  std::vector<int> t = coloring.top;
  for (const BraidLetter& l : diagram.braid().letters()) {
    const std::size_t j = static_cast<std::size_t>(l.index - 1);
    const int a = t[j], b = t[j + 1];
    if (l.sign > 0) {
      t[j] = b;
      t[j + 1] = quandle.op(a, b);
    } else {
      t[j] = quandle.op_inv(b, a);
      t[j + 1] = a;
    }
    used.insert(t[j]);
    used.insert(t[j + 1]);
  }
  return std::vector<int>(used.begin(), used.end());
}

bool check_type_r_extension(const ClosedDiagram& diagram, const Coloring& coloring,
                            const FiniteQuandle& quandle, int r) {
  if (r < 0) throw std::invalid_argument("twist count r must be non-negative");
  const std::vector<int> used = colors_used(diagram, quandle, coloring);
  for (int x : used)
    for (int y : used) {
      int z = x;
      for (int i = 0; i < r; ++i) z = quandle.op(z, y);
      if (z != x) return false;
    }
  return true;
}

}  // namespace qci
