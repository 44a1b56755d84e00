#pragma once

#include <iosfwd>
#include <string>

#include "qci/cocycle.hpp"
#include "qci/quandle.hpp"

namespace qci {

// Quandle text format: line 1 is the order n; lines 2..n+1 hold n
// space-separated 0-based entries (row a, column b = a*b), each optionally
// followed by " # label".  Files written by save_quandle round-trip
// byte-for-byte through load_quandle.
FiniteQuandle load_quandle(std::istream& in);
FiniteQuandle load_quandle_file(const std::string& path);
void save_quandle(std::ostream& out, const FiniteQuandle& quandle);
void save_quandle_file(const std::string& path, const FiniteQuandle& quandle);

// Cocycle text format: header "cocycle2 <order> <modulus>" or
// "cocycle3 <order> <modulus>", then one line per non-zero entry,
// "x1 x2 value" resp. "x1 x2 x3 value", in ascending index order.
enum class CocycleKind { cocycle2, cocycle3 };

struct CocycleFileData {
  CocycleKind kind;
  int order;
  int modulus;
  std::vector<int> values;  // flat table, all entries
};

CocycleFileData load_cocycle(std::istream& in);
CocycleFileData load_cocycle_file(const std::string& path);
void save_cocycle(std::ostream& out, const Cocycle2& cocycle);
void save_cocycle(std::ostream& out, const Cocycle3& cocycle);
void save_cocycle_file(const std::string& path, const Cocycle2& cocycle);
void save_cocycle_file(const std::string& path, const Cocycle3& cocycle);

// Checks the file data against the quandle it is meant to live on (kind and
// order), then builds the verified cocycle.
Cocycle2 cocycle2_from_file_data(const CocycleFileData& data, const FiniteQuandle& quandle);
Cocycle3 cocycle3_from_file_data(const CocycleFileData& data, const FiniteQuandle& quandle);

}  // namespace qci
