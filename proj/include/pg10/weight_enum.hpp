#pragma once

// Weight enumerators, the MacWilliams transform, and the exact linear system
// that pins down the weight distribution of a putative order-10 plane code.

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pg10/errors.hpp"
#include "pg10/exact.hpp"

namespace pg10 {

/// Coefficients A_0..A_N of W(x, y) = sum A_i x^(N-i) y^i.
struct WeightEnumerator {
  std::vector<BigInt> coefficients;

  std::size_t length() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& a : coefficients) s += a;
    return s;
  }

  bool operator==(const WeightEnumerator&) const = default;
};

inline WeightEnumerator enumerator_from(std::initializer_list<long long> coeffs) {
  WeightEnumerator w;
  for (auto c : coeffs) w.coefficients.emplace_back(c);
  return w;
}

/// Coefficient of x^(N-k) y^k in (x+y)^(N-j) (x-y)^j.
inline BigInt krawtchouk(long length, long k, long j) {
  BigInt s = 0;
  for (long t = 0; t <= k; ++t) {
    BigInt term = binomial(j, t) * binomial(length - j, k - t);
    if (t % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

/// W_dual(x, y) = W(x + y, x - y) / |C|, with exact division.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const BigInt& code_size) {
  if (w.coefficients.empty()) throw std::invalid_argument("macwilliams_transform: empty enumerator");
  if (code_size <= 0 || w.total() != code_size)
    throw std::invalid_argument("macwilliams_transform: code size " + code_size.str() + " != sum of coefficients " +
                                w.total().str());
  const long n = static_cast<long>(w.length());
  WeightEnumerator out;
  out.coefficients.resize(w.coefficients.size());
  for (long k = 0; k <= n; ++k) {
    BigInt acc = 0;
    for (long j = 0; j <= n; ++j)
      if (w.coefficients[static_cast<std::size_t>(j)] != 0) acc += w.coefficients[static_cast<std::size_t>(j)] * krawtchouk(n, k, j);
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, code_size, q, r);
    if (r != 0)
      throw NonIntegralResult("macwilliams_transform: coefficient of y^" + std::to_string(k) + " is " + acc.str() + "/" +
                              code_size.str());
    out.coefficients[static_cast<std::size_t>(k)] = std::move(q);
  }
  return out;
}

/// Homogeneous-or-not integer system over a chosen set of unknowns.
struct ExactLinearSystem {
  std::vector<int> unknown_weights;  // weight represented by each column
  IntMatrix rows;
  std::vector<BigInt> rhs;
  std::vector<std::string> labels;  // one per equation, for diagnostics

  std::size_t unknowns() const { return unknown_weights.size(); }

  void add_equation(std::vector<BigInt> coeffs, BigInt value, std::string label) {
    if (coeffs.size() != unknowns()) throw std::invalid_argument("ExactLinearSystem: equation width mismatch");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(value));
    labels.push_back(std::move(label));
  }

  IntMatrix augmented() const {
    IntMatrix m = rows;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    return m;
  }

  std::size_t rank() const { return rows.empty() ? 0 : fraction_free_echelon(rows, unknowns()).rank; }
  std::size_t nullity() const { return unknowns() - rank(); }

  bool consistent() const {
    if (rows.empty()) return true;
    return fraction_free_echelon(augmented(), unknowns() + 1).rank == rank();
  }
};

// Order-10 plane code parameters.
constexpr int kPg10Length = 111;
constexpr int kPg10Dimension = 56;

/// Column holding A_w, using A_w = A_(111-w) for odd weights. -1 when the
/// weight is = 1 or 2 (mod 4) and A_w is forced to zero.
inline int pg10_unknown_index(int weight) {
  if (weight < 0 || weight > kPg10Length) throw std::invalid_argument("pg10_unknown_index: weight out of range");
  if (weight % 4 == 0) return weight / 4;
  if (weight % 4 == 3) return (kPg10Length - weight) / 4;
  return -1;
}

/// One equation per power of y in
///   2^56 * sum A_4i x^(111-4i) y^4i = sum_j A_j (x+y)^(111-j) (x-y)^j
/// over the unknowns A_0, A_4, ..., A_108. With `structural` set the facts
/// A_0 = 1, A_1..A_10 = 0 and A_11 = 111 are appended.
inline ExactLinearSystem build_pg10_system(bool structural = true) {
  ExactLinearSystem sys;
  for (int i = 0; i < 28; ++i) sys.unknown_weights.push_back(4 * i);
  const BigInt size = pow_int(BigInt(2), kPg10Dimension);

  for (int k = 0; k <= kPg10Length; ++k) {
    std::vector<BigInt> coeffs(28);
    for (int j = 0; j <= kPg10Length; ++j) {
      const int col = pg10_unknown_index(j);
      if (col < 0) continue;
      coeffs[static_cast<std::size_t>(col)] += krawtchouk(kPg10Length, k, j);
    }
    if (k % 4 == 0) coeffs[static_cast<std::size_t>(k / 4)] -= size;
    sys.add_equation(std::move(coeffs), 0, "y^" + std::to_string(k));
  }

  if (structural) {
    auto pin = [&](int weight, long value) {
      const int col = pg10_unknown_index(weight);
      if (col < 0) return;
      std::vector<BigInt> coeffs(28);
      coeffs[static_cast<std::size_t>(col)] = 1;
      sys.add_equation(std::move(coeffs), value, "A_" + std::to_string(weight) + "=" + std::to_string(value));
    };
    pin(0, 1);
    for (int w = 1; w <= 10; ++w) pin(w, 0);
    pin(11, 111);
  }
  return sys;
}

using WeightPins = std::map<int, BigInt>;

/// Values supplied by exhaustive searches: A_12 = A_15 = A_16 = 0.
inline WeightPins standard_search_pins() { return {{12, 0}, {15, 0}, {16, 0}}; }

/// The full set of known values, including the ones the structural equations already imply.
inline WeightPins standard_pins() {
  WeightPins p{{0, 1}, {11, 111}};
  for (int w = 1; w <= 10; ++w) p[w] = 0;
  for (auto& [w, v] : standard_search_pins()) p[w] = v;
  return p;
}

/// Unique exact solution of the pinned system, expanded to A_0..A_111.
inline WeightEnumerator solve_weight_distribution(const ExactLinearSystem& system, const WeightPins& pins) {
  ExactLinearSystem sys = system;
  for (const auto& [weight, value] : pins) {
    const int col = pg10_unknown_index(weight);
    if (col < 0) {
      if (value != 0) throw InconsistentPins("A_" + std::to_string(weight) + " must be 0 (weight = 1,2 mod 4)");
      continue;
    }
    std::vector<BigInt> coeffs(sys.unknowns());
    coeffs[static_cast<std::size_t>(col)] = 1;
    sys.add_equation(std::move(coeffs), value, "pin A_" + std::to_string(weight));
  }

  const std::size_t n = sys.unknowns();
  EchelonForm e = fraction_free_echelon(sys.augmented(), n);
  for (std::size_t i = e.rank; i < e.rows.size(); ++i)
    if (e.rows[i][n] != 0) throw InconsistentPins("solve_weight_distribution: pins contradict equation set");
  if (e.rank < n)
    throw UnderDetermined("solve_weight_distribution: " + std::to_string(n - e.rank) + " degrees of freedom remain");

  std::vector<BigRational> x(n);
  for (std::size_t i = e.rank; i-- > 0;) {
    const std::size_t c = e.pivots[i];
    BigRational acc = BigRational(e.rows[i][n]);
    for (std::size_t j = c + 1; j < n; ++j) acc -= BigRational(e.rows[i][j]) * x[j];
    x[c] = acc / BigRational(e.rows[i][c]);
  }

  WeightEnumerator w;
  w.coefficients.resize(kPg10Length + 1);
  for (int weight = 0; weight <= kPg10Length; ++weight) {
    const int col = pg10_unknown_index(weight);
    if (col < 0) continue;
    const BigRational& v = x[static_cast<std::size_t>(col)];
    if (denominator(v) != 1) throw NonIntegralResult("solve_weight_distribution: A_" + std::to_string(weight) + " is not an integer");
    w.coefficients[static_cast<std::size_t>(weight)] = numerator(v);
  }
  return w;
}

/// Published nonzero rows (i <= 55) of the order-10 weight distribution.
inline const std::vector<std::pair<int, BigInt>>& reference_weight_rows() {
  static const std::vector<std::pair<int, BigInt>> rows = {
      {0, BigInt("1")},
      {11, BigInt("111")},
      {19, BigInt("24675")},
      {20, BigInt("386010")},
      {23, BigInt("18864495")},
      {24, BigInt("78227415")},
      {27, BigInt("2698398790")},
      {28, BigInt("8148873195")},
      {31, BigInt("166383964620")},
      {32, BigInt("415533405150")},
      {35, BigInt("5023148053500")},
      {36, BigInt("10604483511375")},
      {39, BigInt("78347862432300")},
      {40, BigInt("141031595676060")},
      {43, BigInt("653162390747370")},
      {44, BigInt("1009413831402540")},
      {47, BigInt("2982186455878665")},
      {48, BigInt("3976279652851020")},
      {51, BigInt("7582305834092682")},
      {52, BigInt("8748789607170360")},
      {55, BigInt("10841059295003634")},
  };
  return rows;
}

// CSV: "i,A_i" header then one row per weight.
inline void write_weight_csv(std::ostream& os, const WeightEnumerator& w) {
  os << "i,A_i\n";
  for (std::size_t i = 0; i < w.coefficients.size(); ++i) os << i << ',' << w.coefficients[i].str() << '\n';
}

// Paired rows i, N-i, A_i for the nonzero half of a symmetric distribution.
inline void write_weight_pairs(std::ostream& os, const WeightEnumerator& w) {
  const std::size_t n = w.length();
  os << "i,N-i,A_i\n";
  for (std::size_t i = 0; 2 * i <= n; ++i)
    if (w.coefficients[i] != 0) os << i << ',' << n - i << ',' << w.coefficients[i].str() << '\n';
}

}  // namespace pg10
