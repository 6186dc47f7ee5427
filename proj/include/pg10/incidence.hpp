#pragma once

// Finite projective planes as incidence structures: construction, axiom
// checking, Gram matrix and the small intersection-count systems used when a
// weight-w configuration is assumed to exist in the order-10 plane.

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg10/errors.hpp"
#include "pg10/exact.hpp"

namespace pg10 {

using PointSet = std::vector<int>;

/// Points are 0..N-1; each line is a sorted point set.
struct IncidenceStructure {
  int order = 0;
  std::vector<PointSet> lines;
  int point_count = 0;

  int line_count() const { return static_cast<int>(lines.size()); }

  bool operator==(const IncidenceStructure&) const = default;
};

inline int plane_size(int order) { return order * order + order + 1; }

// Rows = lines, columns = points.
inline std::vector<std::vector<int>> incidence_matrix(const IncidenceStructure& s) {
  std::vector<std::vector<int>> a(s.lines.size(), std::vector<int>(static_cast<std::size_t>(s.point_count), 0));
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    for (int p : s.lines[i]) a[i][static_cast<std::size_t>(p)] = 1;
  return a;
}

inline IncidenceStructure from_incidence_matrix(int order, const std::vector<std::vector<int>>& a) {
  IncidenceStructure s;
  s.order = order;
  s.point_count = a.empty() ? 0 : static_cast<int>(a.front().size());
  for (const auto& row : a) {
    PointSet line;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) line.push_back(static_cast<int>(j));
    s.lines.push_back(std::move(line));
  }
  return s;
}

/// Points become lines and lines become points.
inline IncidenceStructure dual_structure(const IncidenceStructure& s) {
  auto a = incidence_matrix(s);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(s.point_count), std::vector<int>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return from_incidence_matrix(s.order, t);
}

/// The cyclic Fano plane: line i = {i, i+1, i+3} mod 7.
inline IncidenceStructure fano_plane() {
  IncidenceStructure s;
  s.order = 2;
  s.point_count = 7;
  for (int i = 0; i < 7; ++i) {
    PointSet line{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(line.begin(), line.end());
    s.lines.push_back(line);
  }
  return s;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr int kMaxConstructedOrder = 13;

/// PG(2, p) from homogeneous coordinates over the integers mod p.
inline IncidenceStructure construct_plane_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("construct_plane_prime: order " + std::to_string(p) + " is not prime");
  if (p > kMaxConstructedOrder)
    throw std::invalid_argument("construct_plane_prime: order " + std::to_string(p) + " exceeds limit 13");

  // Normalised representatives: first nonzero coordinate equal to 1.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        std::array<int, 3> v{a, b, c};
        auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (nz != v.end() && *nz == 1) reps.push_back(v);
      }

  IncidenceStructure s;
  s.order = p;
  s.point_count = static_cast<int>(reps.size());
  for (const auto& l : reps) {
    PointSet line;
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto& q = reps[j];
      if ((l[0] * q[0] + l[1] * q[1] + l[2] * q[2]) % p == 0) line.push_back(static_cast<int>(j));
    }
    s.lines.push_back(std::move(line));
  }
  return s;
}

struct Violation {
  int axiom;  // 0 = size mismatch, 1..4 = the four plane axioms
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(int axiom) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [axiom](const Violation& v) { return v.axiom == axiom; }));
  }
};

/// Checks every axiom and reports all violations rather than stopping at the first.
inline ValidationReport validate_projective_plane(const IncidenceStructure& s) {
  ValidationReport rep;
  const int n = s.order;
  const int expected = plane_size(n);
  if (n < 2) rep.violations.push_back({0, "order " + std::to_string(n) + " < 2"});
  if (s.point_count != expected)
    rep.violations.push_back({0, "point count " + std::to_string(s.point_count) + " != " + std::to_string(expected)});
  if (s.line_count() != expected)
    rep.violations.push_back({0, "line count " + std::to_string(s.line_count()) + " != " + std::to_string(expected)});

  const auto np = static_cast<std::size_t>(std::max(s.point_count, 0));
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    for (int p : s.lines[i])
      if (p < 0 || static_cast<std::size_t>(p) >= np) {
        rep.violations.push_back({0, "line " + std::to_string(i) + " names point " + std::to_string(p)});
        return rep;
      }

  auto a = incidence_matrix(s);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int k = 0;
    for (int x : a[i]) k += x;
    if (k != n + 1) rep.violations.push_back({1, "line " + std::to_string(i) + " has " + std::to_string(k) + " points"});
  }
  for (std::size_t j = 0; j < np; ++j) {
    int k = 0;
    for (const auto& row : a) k += row[j];
    if (k != n + 1) rep.violations.push_back({2, "point " + std::to_string(j) + " lies on " + std::to_string(k) + " lines"});
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k) {
      int meet = 0;
      for (std::size_t j = 0; j < np; ++j) meet += a[i][j] & a[k][j];
      if (meet != 1)
        rep.violations.push_back(
            {3, "lines " + std::to_string(i) + "," + std::to_string(k) + " meet in " + std::to_string(meet) + " points"});
    }
  for (std::size_t j = 0; j < np; ++j)
    for (std::size_t k = j + 1; k < np; ++k) {
      int join = 0;
      for (const auto& row : a) join += row[j] & row[k];
      if (join != 1)
        rep.violations.push_back(
            {4, "points " + std::to_string(j) + "," + std::to_string(k) + " lie on " + std::to_string(join) + " common lines"});
    }
  return rep;
}

/// A A^T over the integers. Requires a valid plane.
inline IntMatrix gram_matrix(const IncidenceStructure& s) {
  if (!validate_projective_plane(s).ok()) throw std::invalid_argument("gram_matrix: structure is not a projective plane");
  auto a = incidence_matrix(s);
  IntMatrix g(a.size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      long v = 0;
      for (std::size_t j = 0; j < a[i].size(); ++j) v += a[i][j] * a[k][j];
      g[i][k] = v;
    }
  return g;
}

inline BigInt incidence_determinant(const IncidenceStructure& s) {
  auto a = incidence_matrix(s);
  IntMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
  return determinant(m);
}

/// |det A| = (n+1) n^((n^2+n)/2) for a plane of order n.
inline BigInt incidence_determinant_formula(int n) {
  if (n < 2) throw std::invalid_argument("incidence_determinant_formula: n < 2");
  return BigInt(n + 1) * pow_int(BigInt(n), static_cast<unsigned>((n * n + n) / 2));
}

struct IntersectionDistribution {
  long l1 = 0, l3 = 0, l5 = 0;
  bool operator==(const IntersectionDistribution&) const = default;
};

/// Numbers of lines meeting a weight-w configuration in 1, 3 and 5 points,
/// assuming no line meets it in any other number of points. Solves
///   l1 + l3 + l5 = N,  l1 + 3 l3 + 5 l5 = (n+1) w,  3 l3 + 10 l5 = C(w, 2).
inline IntersectionDistribution line_intersection_distribution(int w, int order = 10) {
  const long lines = plane_size(order);
  if (w < 1 || w > lines) throw std::invalid_argument("line_intersection_distribution: weight out of range");
  const long b1 = lines, b2 = static_cast<long>(order + 1) * w, b3 = static_cast<long>(w) * (w - 1) / 2;
  // Cramer's rule on [[1,1,1],[1,3,5],[0,3,10]], determinant 8.
  constexpr long det = 8;
  const long n1 = b1 * (30 - 15) - 1 * (10 * b2 - 5 * b3) + 1 * (3 * b2 - 3 * b3);
  const long n3 = 1 * (10 * b2 - 5 * b3) - b1 * (10 - 0) + 1 * (b3 - 0);
  const long n5 = 1 * (3 * b3 - 3 * b2) - 1 * (b3 - 0) + b1 * (3 - 0);
  if (n1 % det || n3 % det || n5 % det)
    throw InfeasibleSystem("line_intersection_distribution: non-integral solution for w=" + std::to_string(w));
  IntersectionDistribution d{n1 / det, n3 / det, n5 / det};
  if (d.l1 < 0 || d.l3 < 0 || d.l5 < 0)
    throw InfeasibleSystem("line_intersection_distribution: negative solution for w=" + std::to_string(w));
  return d;
}

struct PointDegreeRow {
  int p1 = 0, p3 = 0, p5 = 0;
  bool operator==(const PointDegreeRow&) const = default;
};

/// Single/triple/heavy line counts through one point of a configuration whose
/// other points number `other_points`: p1+p3+p5 = n+1, 2 p3 + 4 p5 = other_points.
inline std::vector<PointDegreeRow> point_degree_table(int other_points, int order = 10) {
  std::vector<PointDegreeRow> rows;
  if (other_points < 0 || other_points % 2) return rows;
  const int k = order + 1;
  for (int p5 = 0; 4 * p5 <= other_points; ++p5) {
    const int p3 = (other_points - 4 * p5) / 2;
    const int p1 = k - p3 - p5;
    if (p1 >= 0) rows.push_back({p1, p3, p5});
  }
  return rows;
}

inline bool is_sum_of_two_squares(int n) {
  for (int a = 0; a * a <= n; ++a) {
    int r = n - a * a;
    int b = 0;
    while (b * b < r) ++b;
    if (b * b == r) return true;
  }
  return false;
}

/// Necessary condition for a plane of order n to exist.
inline bool bruck_ryser_admissible(int n) {
  if (n < 2) throw std::invalid_argument("bruck_ryser_admissible: n < 2");
  if (n % 4 == 1 || n % 4 == 2) return is_sum_of_two_squares(n);
  return true;
}

// Text format: "n N" header, then one line per plane line listing its sorted points.
inline void write_structure(std::ostream& os, const IncidenceStructure& s) {
  os << s.order << ' ' << s.line_count() << '\n';
  for (const auto& line : s.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << line[i];
    os << '\n';
  }
}

inline IncidenceStructure read_structure(std::istream& is) {
  IncidenceStructure s;
  std::string header;
  if (!std::getline(is, header)) throw ParseError("incidence structure: missing header");
  std::istringstream hs(header);
  int count = 0;
  if (!(hs >> s.order >> count) || count < 0) throw ParseError("incidence structure: bad header '" + header + "'");
  int max_point = -1;
  for (int i = 0; i < count; ++i) {
    std::string text;
    if (!std::getline(is, text)) throw ParseError("incidence structure: expected " + std::to_string(count) + " lines");
    std::istringstream ls(text);
    PointSet line;
    int p;
    while (ls >> p) {
      if (p < 0) throw ParseError("incidence structure: negative point index");
      line.push_back(p);
      max_point = std::max(max_point, p);
    }
    if (!ls.eof()) throw ParseError("incidence structure: bad token on line " + std::to_string(i + 2));
    std::sort(line.begin(), line.end());
    s.lines.push_back(std::move(line));
  }
  // Point set is declared by the order; fall back to observed indices otherwise.
  s.point_count = s.order >= 1 ? std::max(plane_size(s.order), max_point + 1) : max_point + 1;
  return s;
}

}  // namespace pg10
