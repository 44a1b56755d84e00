#include "qci/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qci {

namespace {

void require_well_formed(const QuandleTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("quandle table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("quandle table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("quandle table entry out of range");
  }
}

}  // namespace

AxiomReport verify_quandle_axioms(const QuandleTable& table) {
  require_well_formed(table);
  const int n = static_cast<int>(table.size());
  AxiomReport report;

  for (int a = 0; a < n; ++a) {
    if (table[a][a] != a) {
      report.idempotency = {false, a};
      break;
    }
  }

  for (int b = 0; b < n && report.right_invertibility.pass; ++b) {
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      int image = table[a][b];
      if (seen_at[static_cast<std::size_t>(image)] >= 0) {
        report.right_invertibility = {false, b, seen_at[static_cast<std::size_t>(image)], a};
        break;
      }
      seen_at[static_cast<std::size_t>(image)] = a;
    }
  }

  for (int a = 0; a < n && report.self_distributivity.pass; ++a)
    for (int b = 0; b < n && report.self_distributivity.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) {
          report.self_distributivity = {false, a, b, c};
          break;
        }

  return report;
}

FiniteQuandle FiniteQuandle::from_table(QuandleTable table,
                                        std::vector<std::string> labels,
                                        std::optional<std::vector<int>> inverse_map) {
  AxiomReport report = verify_quandle_axioms(table);
  if (!report.idempotency.pass)
    throw std::invalid_argument("idempotency fails at element " +
                                std::to_string(report.idempotency.element));
  if (!report.right_invertibility.pass)
    throw std::invalid_argument("right-invertibility fails in column " +
                                std::to_string(report.right_invertibility.column));
  if (!report.self_distributivity.pass)
    throw std::invalid_argument(
        "self-distributivity fails at (" + std::to_string(report.self_distributivity.a) + "," +
        std::to_string(report.self_distributivity.b) + "," +
        std::to_string(report.self_distributivity.c) + ")");

  const int n = static_cast<int>(table.size());
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match quandle order");
  if (inverse_map) {
    if (static_cast<int>(inverse_map->size()) != n)
      throw std::invalid_argument("inverse map size does not match quandle order");
    for (int a = 0; a < n; ++a) {
      int b = (*inverse_map)[static_cast<std::size_t>(a)];
      if (b < 0 || b >= n || b == a || (*inverse_map)[static_cast<std::size_t>(b)] != a)
        throw std::invalid_argument("inverse map is not a fixed-point-free involution");
    }
  }

  FiniteQuandle q;
  q.order_ = n;
  q.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  q.inv_table_.resize(q.table_.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q.table_[static_cast<std::size_t>(a * n + b)] = table[a][b];
  // z*b = a  <=>  op_inv(a, b) = z
  for (int z = 0; z < n; ++z)
    for (int b = 0; b < n; ++b)
      q.inv_table_[static_cast<std::size_t>(q.op(z, b) * n + b)] = z;
  q.labels_ = std::move(labels);
  if (inverse_map) q.inverse_map_ = std::move(*inverse_map);
  return q;
}

std::optional<int> FiniteQuandle::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

QuandleTable FiniteQuandle::table() const {
  QuandleTable t(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = op(a, b);
  return t;
}

FiniteQuandle make_dihedral(int p) {
  if (p < 2) throw std::invalid_argument("dihedral quandle needs order >= 2");
  QuandleTable table(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) table[a][b] = ((2 * b - a) % p + p) % p;
  return FiniteQuandle::from_table(std::move(table));
}

FiniteQuandle make_q6() {
  // The six 4-cycles, numbered so that elements a and a+3 are mutually inverse.
  static const char* kCycles[6] = {"(1234)", "(1423)", "(1342)",
                                   "(1432)", "(1324)", "(1243)"};
  std::vector<Perm> cycles;
  std::vector<std::string> labels;
  cycles.reserve(6);
  for (const char* c : kCycles) {
    cycles.push_back(Perm::from_cycle_string(c, 4));
    labels.emplace_back(c);
  }
  std::vector<int> inverse_map = {3, 4, 5, 0, 1, 2};
  FiniteQuandle base = make_conjugation_quandle(cycles);
  return FiniteQuandle::from_table(base.table(), std::move(labels), std::move(inverse_map));
}

FiniteQuandle make_conjugation_quandle(const std::vector<Perm>& elements) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw std::invalid_argument("conjugation quandle needs at least one element");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[static_cast<std::size_t>(i)] == elements[static_cast<std::size_t>(j)])
        throw std::invalid_argument("duplicate permutation in conjugation quandle input");

  QuandleTable table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Perm product = conjugate(elements[static_cast<std::size_t>(g)], elements[static_cast<std::size_t>(h)]);
      auto it = std::find(elements.begin(), elements.end(), product);
      if (it == elements.end())
        throw std::invalid_argument(
            "input set is not closed under conjugation: " +
            elements[static_cast<std::size_t>(g)].cycle_string() + " conjugated by " +
            elements[static_cast<std::size_t>(h)].cycle_string() + " gives " + product.cycle_string());
      table[g][h] = static_cast<int>(it - elements.begin());
    }
  return FiniteQuandle::from_table(std::move(table));
}

int quandle_type(const FiniteQuandle& quandle) {
  const int n = quandle.order();
  long long type = 1;
  for (int y = 0; y < n; ++y) {
    std::vector<int> column(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) column[static_cast<std::size_t>(x)] = quandle.op(x, y);
    long long ord = Perm(std::move(column)).order();
    type = std::lcm(type, ord);
  }
  return static_cast<int>(type);
}

}  // namespace qci
