#pragma once

// Exact integer helpers shared by the determinant and weight-enumerator code.
// Nothing in this project touches floating point.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pg10 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<BigInt>>;

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow_int(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Result of fraction-free (Bareiss) forward elimination.
struct EchelonForm {
  IntMatrix rows;                    // echelon rows, pivot rows first
  std::vector<std::size_t> pivots;   // pivot column of rows[0..rank)
  std::size_t rank = 0;
  int sign = 1;                      // parity of row swaps
  BigInt last_pivot = 1;
};

// Bareiss elimination restricted to the first `cols` columns; extra columns
// (an augmented right-hand side) are carried along. Every intermediate entry
// is a minor of the input, so each division below is exact.
inline EchelonForm fraction_free_echelon(IntMatrix m, std::size_t cols) {
  EchelonForm out;
  const std::size_t nrows = m.size();
  const std::size_t width = nrows ? m.front().size() : 0;
  if (cols > width) throw std::invalid_argument("fraction_free_echelon: column count exceeds width");

  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        BigInt num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("fraction_free_echelon: inexact Bareiss division");
        m[i][j] = std::move(q);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  out.rows = std::move(m);
  return out;
}

// Exact determinant of a square integer matrix.
inline BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  EchelonForm e = fraction_free_echelon(m, n);
  if (e.rank < n) return 0;
  return e.sign * e.last_pivot;
}

}  // namespace pg10
