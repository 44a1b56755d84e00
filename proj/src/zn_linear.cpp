#include "qci/zn_linear.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qci {

namespace {

// Symmetric residue in (-n/2, n/2]: keeps magnitudes small during elimination.
long long balance(long long v, long long n) {
  v %= n;
  if (v < 0) v += n;
  if (2 * v > n) v -= n;
  return v;
}

struct Matrix {
  std::size_t rows, cols;
  std::vector<long long> a;
  long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

void swap_cols(Matrix& m, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

// row_i -= q * row_k, entries rebalanced mod n
void row_op(Matrix& m, std::size_t i, std::size_t k, long long q, long long n) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = balance(m.at(i, j) - q * m.at(k, j), n);
}

void col_op(Matrix& m, std::size_t j, std::size_t k, long long q, long long n) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = balance(m.at(i, j) - q * m.at(i, k), n);
}

}  // namespace

ZnKernel::Size ZnKernel::size() const {
  Size s{false, 1};
  for (const auto& g : generators) {
    if (__builtin_mul_overflow(s.value, static_cast<std::uint64_t>(g.count), &s.value)) {
      s.overflow = true;
      s.value = 0;
      return s;
    }
  }
  return s;
}

ZnKernel solve_homogeneous_mod(const std::vector<std::vector<int>>& rows, int unknowns,
                               int modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (unknowns < 0) throw std::invalid_argument("negative unknown count");
  const long long n = modulus;
  const std::size_t cols = static_cast<std::size_t>(unknowns);

  Matrix a{rows.size(), cols, std::vector<long long>(rows.size() * cols, 0)};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = balance(rows[i][j], n);
  }
  // v: column transform, kept mod n.  Solutions are x = v * y with the
  // diagonalized system constraining y coordinate-wise.
  Matrix v{cols, cols, std::vector<long long>(cols * cols, 0)};
  for (std::size_t j = 0; j < cols; ++j) v.at(j, j) = 1;

  const std::size_t steps = std::min(a.rows, cols);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    // Minimal nonzero |entry| in the trailing block; ties to lowest row, column.
    std::size_t pi = k, pj = k;
    long long best = 0;
    for (std::size_t i = k; i < a.rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        long long m = std::llabs(a.at(i, j));
        if (m != 0 && (best == 0 || m < best)) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(a, k, pi);
    swap_cols(a, k, pj);
    swap_cols(v, k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < a.rows; ++i) {
        if (a.at(i, k) == 0) continue;
        long long q = a.at(i, k) / a.at(k, k);
        row_op(a, i, k, q, n);
        if (a.at(i, k) != 0) {  // remainder smaller than pivot: promote it
          swap_rows(a, i, k);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a.at(k, j) == 0) continue;
        long long q = a.at(k, j) / a.at(k, k);
        col_op(a, j, k, q, n);
        col_op(v, j, k, q, n);
        if (a.at(k, j) != 0) {
          swap_cols(a, j, k);
          swap_cols(v, j, k);
          clean = false;
        }
      }
      if (clean) {
        // Column ops may have refilled column k below the pivot.
        for (std::size_t i = k + 1; i < a.rows && clean; ++i)
          if (a.at(i, k) != 0) clean = false;
      }
    }
    ++rank;
  }

  ZnKernel kernel;
  kernel.modulus = modulus;
  kernel.unknowns = unknowns;
  for (std::size_t j = 0; j < cols; ++j) {
    long long d = j < rank ? a.at(j, j) : 0;
    long long dmod = ((d % n) + n) % n;
    long long g = dmod == 0 ? n : std::gcd(dmod, n);
    if (g <= 1) continue;
    long long stride = n / g;
    ZnKernel::Generator gen;
    gen.count = static_cast<int>(g);
    gen.column.resize(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      long long e = ((v.at(i, j) % n) + n) % n;
      gen.column[i] = static_cast<int>((e * stride) % n);
    }
    kernel.generators.push_back(std::move(gen));
  }
  return kernel;
}

}  // namespace qci
