#pragma once

// Symmetries of the canonical structure. Labelling A-points by transpositions
// of six symbols turns heavy lines into symbols and triple lines into perfect
// matchings, so conjugation by (t_i t_i+1) permutes A, the heavy lines and the
// triple lines; C-points follow as intersections of triple lines.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg10/canonical.hpp"

namespace pg10::a15 {

constexpr Point kActedPoints = kLastC;  // the action is on A ∪ C = 1..75

/// Permutation of the points 1..75 (slot 0 unused).
class Permutation {
 public:
  Permutation() {
    for (std::size_t i = 0; i < image_.size(); ++i) image_[i] = static_cast<std::uint8_t>(i);
  }

  static Permutation identity() { return {}; }

  /// images[k] is the image of point k + 1; must be a bijection of 1..75.
  static Permutation from_images(const std::vector<Point>& images) {
    if (images.size() != kActedPoints) throw std::invalid_argument("Permutation: need 75 images");
    Permutation g;
    std::array<bool, kActedPoints + 1> seen{};
    for (std::size_t k = 0; k < images.size(); ++k) {
      const Point q = images[k];
      if (q < 1 || q > kActedPoints || seen[static_cast<std::size_t>(q)])
        throw std::invalid_argument("Permutation: images are not a bijection of 1..75");
      seen[static_cast<std::size_t>(q)] = true;
      g.image_[k + 1] = static_cast<std::uint8_t>(q);
    }
    return g;
  }

  Point operator()(Point p) const { return image_[static_cast<std::size_t>(p)]; }

  /// (this * other)(p) = this(other(p)).
  Permutation after(const Permutation& other) const {
    Permutation r;
    for (std::size_t p = 1; p < image_.size(); ++p) r.image_[p] = image_[other.image_[p]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    for (std::size_t p = 1; p < image_.size(); ++p) r.image_[image_[p]] = static_cast<std::uint8_t>(p);
    return r;
  }

  bool is_identity() const { return *this == Permutation{}; }

  const std::array<std::uint8_t, kActedPoints + 1>& images() const { return image_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::array<std::uint8_t, kActedPoints + 1> image_{};
};

struct GroupElement {
  Permutation perm;
  std::vector<int> word;  // generator indices, rightmost applied first
};

namespace detail {

inline Point a_point_with_label(const std::array<std::pair<int, int>, 15>& labels, std::pair<int, int> want) {
  if (want.first > want.second) std::swap(want.first, want.second);
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == want) return static_cast<Point>(k + 1);
  throw std::logic_error("no A-point carries the requested transposition");
}

inline int swap_symbol(int x, int i) {
  if (x == i) return i + 1;
  if (x == i + 1) return i;
  return x;
}

}  // namespace detail

/// Conjugation by (t_i t_i+1) on the A-points, i in 1..5; other points fixed.
inline Permutation tau_on_A(const CanonicalStructure& s, int i) {
  if (i < 1 || i > 5) throw std::invalid_argument("tau_on_A: generator index must be 1..5");
  const auto labels = transposition_labels(s);
  std::vector<Point> images(kActedPoints);
  for (Point p = 1; p <= kActedPoints; ++p) images[static_cast<std::size_t>(p - 1)] = p;
  for (Point p = kFirstA; p <= kLastA; ++p) {
    auto [a, b] = labels[static_cast<std::size_t>(p - 1)];
    images[static_cast<std::size_t>(p - 1)] =
        detail::a_point_with_label(labels, {detail::swap_symbol(a, i), detail::swap_symbol(b, i)});
  }
  return Permutation::from_images(images);
}

/// Image of each triple line under a permutation of A, or -1 if the image of
/// its A-points is not a triple line.
inline std::array<int, kTripleCount> triple_line_images(const CanonicalStructure& s, const Permutation& on_a) {
  std::array<int, kTripleCount> out{};
  for (int t = 0; t < kTripleCount; ++t) {
    auto pts = s.a_points_of_triple(t);
    for (auto& p : pts) p = on_a(p);
    std::sort(pts.begin(), pts.end());
    out[static_cast<std::size_t>(t)] = -1;
    for (int u = 0; u < kTripleCount; ++u)
      if (s.a_points_of_triple(u) == pts) out[static_cast<std::size_t>(t)] = u;
  }
  return out;
}

/// Extends a permutation of A to A ∪ C: a C-point on triple lines Ca, Cb goes
/// to the meet of their images.
inline Permutation extend_to_c(const CanonicalStructure& s, const Permutation& on_a) {
  const auto lines = triple_line_images(s, on_a);
  std::vector<Point> images(kActedPoints);
  for (Point p = kFirstA; p <= kLastA; ++p) images[static_cast<std::size_t>(p - 1)] = on_a(p);
  for (Point p = kFirstC; p <= kLastC; ++p) {
    const auto& through = s.triple_through[static_cast<std::size_t>(p)];
    const int a = lines[static_cast<std::size_t>(through[0])];
    const int b = lines[static_cast<std::size_t>(through[1])];
    if (a < 0 || b < 0) throw std::logic_error("extend_to_c: permutation does not preserve the triple lines");
    const Point q = s.triple_meet(a, b);
    if (!is_c_point(q)) throw std::logic_error("extend_to_c: image lines do not meet in a C-point");
    images[static_cast<std::size_t>(p - 1)] = q;
  }
  return Permutation::from_images(images);
}

/// The generator tau_i acting on all of A ∪ C.
inline Permutation tau(const CanonicalStructure& s, int i) { return extend_to_c(s, tau_on_A(s, i)); }

/// Restriction of tau_i to the C-points (A-points fixed).
inline Permutation tau_on_C(const CanonicalStructure& s, int i) {
  const Permutation full = tau(s, i);
  std::vector<Point> images(kActedPoints);
  for (Point p = 1; p <= kActedPoints; ++p) images[static_cast<std::size_t>(p - 1)] = is_c_point(p) ? full(p) : p;
  return Permutation::from_images(images);
}

inline std::vector<Permutation> tau_generators(const CanonicalStructure& s) {
  std::vector<Permutation> g;
  for (int i = 1; i <= 5; ++i) g.push_back(tau(s, i));
  return g;
}

/// Does g map the heavy-line set and the triple-line set onto themselves (on A)?
inline bool preserves_structure(const CanonicalStructure& s, const Permutation& g) {
  auto a_part = [](const Line& l) {
    std::vector<Point> pts;
    for (Point p : l)
      if (is_a_point(p)) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  auto mapped = [&](const Line& l) {
    auto pts = a_part(l);
    for (auto& p : pts) p = g(p);
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  auto contains = [&](const auto& lines, const std::vector<Point>& pts) {
    return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return a_part(l) == pts; });
  };
  for (const auto& l : s.heavy)
    if (!contains(s.heavy, mapped(l))) return false;
  for (const auto& l : s.triple)
    if (!contains(s.triple, mapped(l))) return false;
  // C-points must stay intersections of the mapped triple lines.
  for (Point p = kFirstC; p <= kLastC; ++p) {
    const Point q = g(p);
    if (!is_c_point(q)) return false;
    for (int t : s.triple_through[static_cast<std::size_t>(p)]) {
      auto img = mapped(s.triple[static_cast<std::size_t>(t)]);
      bool found = false;
      for (int u : s.triple_through[static_cast<std::size_t>(q)])
        if (a_part(s.triple[static_cast<std::size_t>(u)]) == img) found = true;
      if (!found) return false;
    }
  }
  return true;
}

constexpr std::size_t kDefaultGroupBound = 10000;

/// Closure of the generators under composition, in breadth-first order from
/// the identity (generators tried in the order given).
inline std::vector<GroupElement> generate_group(const std::vector<Permutation>& generators,
                                                std::size_t bound = kDefaultGroupBound) {
  std::vector<GroupElement> elems;
  std::map<Permutation, std::size_t> seen;
  elems.push_back({Permutation::identity(), {}});
  seen.emplace(Permutation::identity(), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation next = generators[gi].after(elems[head].perm);
      if (seen.count(next)) continue;
      if (elems.size() >= bound)
        throw std::length_error("generate_group: closure exceeds bound " + std::to_string(bound));
      std::vector<int> word = elems[head].word;
      word.insert(word.begin(), static_cast<int>(gi));
      seen.emplace(next, elems.size());
      elems.push_back({next, std::move(word)});
    }
  }
  return elems;
}

/// Subgroup fixing point 1: generated by tau_1, tau_3, tau_4, tau_5.
inline std::vector<Permutation> stabilizer_generators(const CanonicalStructure& s) {
  return {tau(s, 1), tau(s, 3), tau(s, 4), tau(s, 5)};
}

// Printed action of tau_1..tau_5 on points 1..75 (row i-1 = tau_i).
using TauTable = std::array<std::array<Point, kActedPoints>, 5>;

inline constexpr TauTable kPrintedTauTable = {{
    {1,  6,  7,  8,  9,  2,  3,  4,  5,  10, 11, 12, 13, 14, 15,
     20, 22, 21, 23, 16, 18, 17, 19, 26, 30, 24, 28, 27, 31, 25,
     29, 34, 36, 32, 38, 33, 39, 35, 37, 58, 60, 46, 61, 52, 59,
     42, 70, 62, 71, 54, 66, 44, 72, 50, 64, 68, 74, 40, 45, 41,
     43, 48, 73, 55, 67, 51, 65, 56, 75, 47, 49, 53, 63, 57, 69},
    {2,  1,  3,  4,  5,  6,  10, 11, 12, 7,  8,  9,  13, 14, 15,
     24, 32, 41, 40, 42, 43, 44, 45, 16, 33, 46, 47, 49, 48, 50,
     51, 17, 25, 52, 53, 54, 55, 57, 56, 19, 18, 20, 21, 22, 23,
     26, 27, 29, 28, 30, 31, 34, 35, 36, 37, 39, 38, 59, 58, 61,
     60, 66, 67, 68, 69, 62, 63, 64, 65, 71, 70, 74, 75, 72, 73},
    {1,  3,  2,  4,  5,  7,  6,  8,  9,  10, 13, 14, 11, 12, 15,
     18, 19, 16, 17, 21, 20, 23, 22, 34, 35, 32, 33, 36, 37, 38,
     39, 26, 27, 24, 25, 28, 29, 30, 31, 46, 52, 58, 59, 60, 61,
     40, 53, 62, 63, 65, 64, 41, 47, 67, 66, 68, 69, 42, 43, 44,
     45, 48, 49, 51, 50, 55, 54, 56, 57, 72, 73, 70, 71, 75, 74},
    {1,  2,  4,  3,  5,  6,  8,  7,  9,  11, 10, 12, 13, 15, 14,
     24, 25, 28, 29, 26, 27, 30, 31, 16, 17, 20, 21, 18, 19, 22,
     23, 33, 32, 36, 37, 34, 35, 39, 38, 48, 49, 46, 47, 50, 51,
     42, 43, 40, 41, 44, 45, 54, 55, 52, 53, 57, 56, 62, 66, 71,
     70, 58, 67, 72, 73, 59, 63, 74, 75, 61, 60, 64, 65, 68, 69},
    {1,  2,  3,  5,  4,  6,  7,  9,  8,  10, 12, 11, 14, 13, 15,
     17, 16, 19, 18, 22, 23, 20, 21, 32, 33, 34, 35, 38, 39, 36,
     37, 24, 25, 26, 27, 30, 31, 28, 29, 41, 40, 44, 45, 42, 43,
     52, 53, 56, 57, 54, 55, 46, 47, 50, 51, 48, 49, 60, 61, 58,
     59, 68, 69, 66, 67, 64, 65, 62, 63, 72, 74, 70, 75, 71, 73},
}};

struct TableDiff {
  int generator;  // 1..5
  Point point;
  Point printed;
  Point derived;

  bool operator==(const TableDiff&) const = default;
};

struct TableCheck {
  std::size_t cells_checked = 0;
  std::vector<TableDiff> diffs;
  std::vector<int> label_mismatches;  // A-points whose derived symbol pair differs from the printed one
};

/// Derives the tau actions and compares them cell by cell with `printed`.
inline TableCheck verify_tau_tables(const CanonicalStructure& s, const TauTable& printed = kPrintedTauTable) {
  TableCheck out;
  const auto labels = transposition_labels(s);
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != kPrintedTranspositions[k]) out.label_mismatches.push_back(static_cast<int>(k + 1));
  for (int i = 1; i <= 5; ++i) {
    const Permutation g = tau(s, i);
    for (Point p = 1; p <= kActedPoints; ++p) {
      ++out.cells_checked;
      const Point want = printed[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p - 1)];
      if (g(p) != want) out.diffs.push_back({i, p, want, g(p)});
    }
  }
  return out;
}

}  // namespace pg10::a15
