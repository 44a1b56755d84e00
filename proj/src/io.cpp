#include "qci/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qci {

namespace {

std::runtime_error io_error(const std::string& message) {
  return std::runtime_error("quandle/cocycle file: " + message);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteQuandle load_quandle(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw io_error("missing order line");
  int n = 0;
  try {
    n = std::stoi(trim(line));
  } catch (const std::exception&) {
    throw io_error("order line is not an integer");
  }
  if (n < 1 || n > 4096) throw io_error("order out of range");

  QuandleTable table;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  bool any_label = false;
  for (int a = 0; a < n; ++a) {
    if (!std::getline(in, line)) throw io_error("missing row " + std::to_string(a));
    std::string row_part = line;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      row_part = line.substr(0, hash);
      labels[static_cast<std::size_t>(a)] = trim(line.substr(hash + 1));
      any_label = true;
    }
    std::istringstream row_in(row_part);
    std::vector<int> row;
    int v = 0;
    while (row_in >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != n)
      throw io_error("row " + std::to_string(a) + " has " + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(n));
    table.push_back(std::move(row));
  }
  return FiniteQuandle::from_table(std::move(table),
                                   any_label ? std::move(labels) : std::vector<std::string>{});
}

void save_quandle(std::ostream& out, const FiniteQuandle& quandle) {
  const int n = quandle.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << quandle.op(a, b);
    }
    if (quandle.has_labels() && !quandle.label(a).empty()) out << " # " << quandle.label(a);
    out << "\n";
  }
}

FiniteQuandle load_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return load_quandle(in);
}

void save_quandle_file(const std::string& path, const FiniteQuandle& quandle) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  save_quandle(out, quandle);
}

CocycleFileData load_cocycle(std::istream& in) {
  std::string kind_token;
  int order = 0, modulus = 0;
  if (!(in >> kind_token >> order >> modulus)) throw io_error("malformed cocycle header");
  CocycleKind kind;
  if (kind_token == "cocycle2")
    kind = CocycleKind::cocycle2;
  else if (kind_token == "cocycle3")
    kind = CocycleKind::cocycle3;
  else
    throw io_error("unknown cocycle kind '" + kind_token + "'");
  if (order < 1 || order > 4096) throw io_error("cocycle order out of range");
  if (modulus < 2) throw io_error("cocycle modulus must be >= 2");

  const int arity = kind == CocycleKind::cocycle2 ? 2 : 3;
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(order);
  std::vector<int> values(size, 0);

  std::string line;
  std::getline(in, line);  // rest of header line
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty()) continue;
    std::istringstream entry(body);
    std::vector<int> fields;
    int v = 0;
    while (entry >> v) fields.push_back(v);
    if (static_cast<int>(fields.size()) != arity + 1)
      throw io_error("line " + std::to_string(line_no) + ": expected " + std::to_string(arity) +
                     " indices and a value");
    std::size_t index = 0;
    for (int i = 0; i < arity; ++i) {
      if (fields[static_cast<std::size_t>(i)] < 0 || fields[static_cast<std::size_t>(i)] >= order)
        throw io_error("line " + std::to_string(line_no) + ": index out of range");
      index = index * static_cast<std::size_t>(order) +
              static_cast<std::size_t>(fields[static_cast<std::size_t>(i)]);
    }
    int value = fields[static_cast<std::size_t>(arity)];
    if (value < 1 || value >= modulus)
      throw io_error("line " + std::to_string(line_no) +
                     ": value must be non-zero and below the modulus");
    if (values[index] != 0) throw io_error("line " + std::to_string(line_no) + ": duplicate entry");
    values[index] = value;
  }
  return CocycleFileData{kind, order, modulus, std::move(values)};
}

namespace {

void save_cocycle_impl(std::ostream& out, const char* kind, int order, int modulus, int arity,
                       const std::vector<int>& values) {
  out << kind << ' ' << order << ' ' << modulus << "\n";
  for (std::size_t index = 0; index < values.size(); ++index) {
    if (values[index] == 0) continue;
    std::size_t rest = index;
    std::vector<int> digits(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(order));
      rest /= static_cast<std::size_t>(order);
    }
    for (int d : digits) out << d << ' ';
    out << values[index] << "\n";
  }
}

}  // namespace

void save_cocycle(std::ostream& out, const Cocycle2& cocycle) {
  save_cocycle_impl(out, "cocycle2", cocycle.order(), cocycle.modulus(), 2, cocycle.values());
}

void save_cocycle(std::ostream& out, const Cocycle3& cocycle) {
  save_cocycle_impl(out, "cocycle3", cocycle.order(), cocycle.modulus(), 3, cocycle.values());
}

CocycleFileData load_cocycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return load_cocycle(in);
}

void save_cocycle_file(const std::string& path, const Cocycle2& cocycle) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  save_cocycle(out, cocycle);
}

void save_cocycle_file(const std::string& path, const Cocycle3& cocycle) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  save_cocycle(out, cocycle);
}

Cocycle2 cocycle2_from_file_data(const CocycleFileData& data, const FiniteQuandle& quandle) {
  if (data.kind != CocycleKind::cocycle2) throw io_error("expected a cocycle2 file");
  if (data.order != quandle.order())
    throw io_error("cocycle order " + std::to_string(data.order) +
                   " does not match quandle order " + std::to_string(quandle.order()));
  return Cocycle2::create(quandle, Coefficients{data.modulus}, data.values);
}

Cocycle3 cocycle3_from_file_data(const CocycleFileData& data, const FiniteQuandle& quandle) {
  if (data.kind != CocycleKind::cocycle3) throw io_error("expected a cocycle3 file");
  if (data.order != quandle.order())
    throw io_error("cocycle order " + std::to_string(data.order) +
                   " does not match quandle order " + std::to_string(quandle.order()));
  return Cocycle3::create(quandle, Coefficients{data.modulus}, data.values);
}

}  // namespace qci
