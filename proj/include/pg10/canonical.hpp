#pragma once

// The forced partial structure of an order-10 plane containing a weight-15
// codeword A = {1..15}: six heavy lines (5 points of A each), fifteen triple
// lines (3 points of A each), the 60 C-points 16..75 lying on two triple
// lines each and the 36 B-points 76..111 lying on one heavy line each.
// Point labels are kept 1-based here so they read the same as the tables.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pg10::a15 {

using Point = int;

constexpr Point kFirstA = 1, kLastA = 15;
constexpr Point kFirstC = 16, kLastC = 75;
constexpr Point kFirstB = 76, kLastB = 111;
constexpr int kHeavyCount = 6;
constexpr int kTripleCount = 15;
constexpr int kLineSize = 11;

inline bool is_a_point(Point p) { return p >= kFirstA && p <= kLastA; }
inline bool is_c_point(Point p) { return p >= kFirstC && p <= kLastC; }
inline bool is_b_point(Point p) { return p >= kFirstB && p <= kLastB; }

using Line = std::array<Point, kLineSize>;

// Heavy lines B1..B6 and triple lines C1..C15, A-points first.
inline constexpr std::array<Line, kHeavyCount> kHeavyLines = {{
    {1, 2, 3, 4, 5, 76, 77, 78, 79, 80, 81},
    {1, 6, 7, 8, 9, 82, 83, 84, 85, 86, 87},
    {2, 6, 10, 11, 12, 88, 89, 90, 91, 92, 93},
    {3, 7, 10, 13, 14, 94, 95, 96, 97, 98, 99},
    {4, 8, 11, 13, 15, 100, 101, 102, 103, 104, 105},
    {5, 9, 12, 14, 15, 106, 107, 108, 109, 110, 111},
}};

inline constexpr std::array<Line, kTripleCount> kTripleLines = {{
    {1, 10, 15, 16, 17, 18, 19, 20, 21, 22, 23},
    {1, 11, 14, 24, 25, 26, 27, 28, 29, 30, 31},
    {1, 12, 13, 32, 33, 34, 35, 36, 37, 38, 39},
    {2, 7, 15, 24, 32, 40, 41, 42, 43, 44, 45},
    {2, 8, 14, 16, 33, 46, 47, 48, 49, 50, 51},
    {2, 9, 13, 17, 25, 52, 53, 54, 55, 56, 57},
    {3, 6, 15, 26, 34, 46, 52, 58, 59, 60, 61},
    {3, 8, 12, 18, 27, 40, 53, 62, 63, 64, 65},
    {3, 9, 11, 19, 35, 41, 47, 66, 67, 68, 69},
    {4, 6, 14, 20, 36, 42, 54, 62, 66, 70, 71},
    {4, 7, 12, 21, 28, 48, 55, 58, 67, 72, 73},
    {4, 9, 10, 29, 37, 43, 49, 59, 63, 74, 75},
    {5, 6, 13, 22, 30, 44, 50, 64, 68, 72, 74},
    {5, 7, 11, 23, 38, 51, 56, 60, 65, 70, 75},
    {5, 8, 10, 31, 39, 45, 57, 61, 69, 71, 73},
}};

/// Symbol pair {a, b} (1..6) attached to an A-point, as tabulated.
inline constexpr std::array<std::pair<int, int>, 15> kPrintedTranspositions = {{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
    {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
}};

struct CanonicalStructure {
  std::array<Line, kHeavyCount> heavy{};
  std::array<Line, kTripleCount> triple{};

  // Line indices (0-based) through each point; index by point label.
  std::array<std::vector<int>, kLastB + 1> heavy_through{};
  std::array<std::vector<int>, kLastB + 1> triple_through{};

  bool on_heavy(int line, Point p) const {
    return std::find(heavy[static_cast<std::size_t>(line)].begin(), heavy[static_cast<std::size_t>(line)].end(), p) !=
           heavy[static_cast<std::size_t>(line)].end();
  }
  bool on_triple(int line, Point p) const {
    return std::find(triple[static_cast<std::size_t>(line)].begin(), triple[static_cast<std::size_t>(line)].end(), p) !=
           triple[static_cast<std::size_t>(line)].end();
  }

  /// Common point of two distinct triple lines, 0 if none.
  Point triple_meet(int a, int b) const {
    for (Point p : triple[static_cast<std::size_t>(a)])
      if (on_triple(b, p)) return p;
    return 0;
  }

  /// The (up to 3) A-points of a triple line, sorted.
  std::vector<Point> a_points_of_triple(int line) const {
    std::vector<Point> out;
    for (Point p : triple[static_cast<std::size_t>(line)])
      if (is_a_point(p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline void index_incidences(CanonicalStructure& s) {
  for (auto& v : s.heavy_through) v.clear();
  for (auto& v : s.triple_through) v.clear();
  for (int i = 0; i < kHeavyCount; ++i)
    for (Point p : s.heavy[static_cast<std::size_t>(i)])
      if (p >= 1 && p <= kLastB) s.heavy_through[static_cast<std::size_t>(p)].push_back(i);
  for (int i = 0; i < kTripleCount; ++i)
    for (Point p : s.triple[static_cast<std::size_t>(i)])
      if (p >= 1 && p <= kLastB) s.triple_through[static_cast<std::size_t>(p)].push_back(i);
}

/// Every structural property the search relies on; empty when the structure is sound.
inline std::vector<std::string> structure_violations(const CanonicalStructure& s) {
  std::vector<std::string> out;
  auto label = [](char kind, int i) { return std::string(1, kind) + std::to_string(i + 1); };

  auto check_line = [&](const Line& l, char kind, int i, int want_a, bool (*other)(Point), int want_other) {
    Line sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.push_back(label(kind, i) + " repeats a point");
    const auto na = std::count_if(l.begin(), l.end(), is_a_point);
    const auto no = std::count_if(l.begin(), l.end(), other);
    if (na != want_a || no != want_other)
      out.push_back(label(kind, i) + " has " + std::to_string(na) + " A-points and " + std::to_string(no) + " others");
  };
  for (int i = 0; i < kHeavyCount; ++i) check_line(s.heavy[static_cast<std::size_t>(i)], 'B', i, 5, is_b_point, 6);
  for (int i = 0; i < kTripleCount; ++i) check_line(s.triple[static_cast<std::size_t>(i)], 'C', i, 3, is_c_point, 8);

  // Two heavy lines meet in exactly one point, which lies in A.
  for (int i = 0; i < kHeavyCount; ++i)
    for (int j = i + 1; j < kHeavyCount; ++j) {
      int meet = 0;
      bool in_a = true;
      for (Point p : s.heavy[static_cast<std::size_t>(i)])
        if (s.on_heavy(j, p)) {
          ++meet;
          in_a = in_a && is_a_point(p);
        }
      if (meet != 1 || !in_a) out.push_back(label('B', i) + " and " + label('B', j) + " do not meet in one A-point");
    }
  // Any two of the 21 lines share at most one point; heavy/triple pairs share exactly one A-point.
  for (int i = 0; i < kTripleCount; ++i) {
    for (int j = i + 1; j < kTripleCount; ++j) {
      int meet = 0;
      for (Point p : s.triple[static_cast<std::size_t>(i)]) meet += s.on_triple(j, p);
      if (meet != 1) out.push_back(label('C', i) + " and " + label('C', j) + " meet in " + std::to_string(meet) + " points");
    }
    for (int h = 0; h < kHeavyCount; ++h) {
      int meet = 0;
      for (Point p : s.triple[static_cast<std::size_t>(i)]) meet += s.on_heavy(h, p);
      if (meet != 1) out.push_back(label('C', i) + " and " + label('B', h) + " meet in " + std::to_string(meet) + " points");
    }
  }

  for (Point p = kFirstA; p <= kLastA; ++p) {
    const auto nh = s.heavy_through[static_cast<std::size_t>(p)].size();
    const auto nt = s.triple_through[static_cast<std::size_t>(p)].size();
    if (nh != 2) out.push_back("A-point " + std::to_string(p) + " lies on " + std::to_string(nh) + " heavy lines");
    if (nt != 3) out.push_back("A-point " + std::to_string(p) + " lies on " + std::to_string(nt) + " triple lines");
  }
  for (Point p = kFirstC; p <= kLastC; ++p) {
    const auto nt = s.triple_through[static_cast<std::size_t>(p)].size();
    const auto nh = s.heavy_through[static_cast<std::size_t>(p)].size();
    if (nt != 2 || nh != 0) out.push_back("C-point " + std::to_string(p) + " lies on " + std::to_string(nt) + " triple lines");
  }
  for (Point p = kFirstB; p <= kLastB; ++p) {
    const auto nh = s.heavy_through[static_cast<std::size_t>(p)].size();
    const auto nt = s.triple_through[static_cast<std::size_t>(p)].size();
    if (nh != 1 || nt != 0) out.push_back("B-point " + std::to_string(p) + " lies on " + std::to_string(nh) + " heavy lines");
  }

  // Each pair of A-points is joined by exactly one heavy or triple line.
  for (Point p = kFirstA; p <= kLastA; ++p)
    for (Point q = p + 1; q <= kLastA; ++q) {
      int cover = 0;
      for (int h = 0; h < kHeavyCount; ++h) cover += s.on_heavy(h, p) && s.on_heavy(h, q);
      for (int t = 0; t < kTripleCount; ++t) cover += s.on_triple(t, p) && s.on_triple(t, q);
      if (cover != 1)
        out.push_back("A-points " + std::to_string(p) + "," + std::to_string(q) + " covered " + std::to_string(cover) + " times");
    }
  return out;
}

inline CanonicalStructure make_structure(const std::array<Line, kHeavyCount>& heavy,
                                         const std::array<Line, kTripleCount>& triple) {
  CanonicalStructure s;
  s.heavy = heavy;
  s.triple = triple;
  index_incidences(s);
  return s;
}

/// Builds the tabulated structure and aborts on any inconsistency.
inline CanonicalStructure build_canonical_structure() {
  CanonicalStructure s = make_structure(kHeavyLines, kTripleLines);
  auto bad = structure_violations(s);
  if (!bad.empty()) throw std::logic_error("canonical structure inconsistent: " + bad.front());
  return s;
}

/// Symbol pair of each A-point, read off the two heavy lines through it.
inline std::array<std::pair<int, int>, 15> transposition_labels(const CanonicalStructure& s) {
  std::array<std::pair<int, int>, 15> labels{};
  for (Point p = kFirstA; p <= kLastA; ++p) {
    const auto& h = s.heavy_through[static_cast<std::size_t>(p)];
    if (h.size() != 2) throw std::logic_error("transposition_labels: A-point not on two heavy lines");
    labels[static_cast<std::size_t>(p - 1)] = {h[0] + 1, h[1] + 1};
  }
  return labels;
}

inline std::pair<int, int> transposition_label(const CanonicalStructure& s, Point p) {
  if (!is_a_point(p)) throw std::invalid_argument("transposition_label: not an A-point");
  return transposition_labels(s)[static_cast<std::size_t>(p - 1)];
}

}  // namespace pg10::a15
