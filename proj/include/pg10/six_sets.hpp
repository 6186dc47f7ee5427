#pragma once

// 6-sets (the C-part of a single line through an A-point), K6 bundles (six
// pairwise-disjoint 6-sets through one anchor) and their orbits.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pg10/canonical.hpp"
#include "pg10/group.hpp"

namespace pg10::a15 {

using CMask = std::uint64_t;  // bit k <-> C-point 16 + k

inline CMask c_bit(Point p) { return CMask{1} << (p - kFirstC); }

/// Six C-points stored as a bit mask.
struct SixSet {
  CMask mask = 0;

  static SixSet from_points(const std::vector<Point>& pts) {
    SixSet s;
    for (Point p : pts) {
      if (!is_c_point(p)) throw std::invalid_argument("SixSet: point " + std::to_string(p) + " is not a C-point");
      s.mask |= c_bit(p);
    }
    return s;
  }

  std::vector<Point> points() const {
    std::vector<Point> pts;
    for (CMask m = mask; m; m &= m - 1) pts.push_back(kFirstC + std::countr_zero(m));
    return pts;
  }

  int size() const { return std::popcount(mask); }
  bool contains(Point p) const { return is_c_point(p) && (mask & c_bit(p)); }

  bool operator==(const SixSet&) const = default;
  // Lexicographic order of the sorted point lists: the set holding the
  // smallest point of the symmetric difference comes first.
  friend bool operator<(const SixSet& a, const SixSet& b) {
    const CMask d = a.mask ^ b.mask;
    return d && (a.mask & (d & (~d + 1)));
  }
};

inline int meet_count(const SixSet& a, const SixSet& b) { return std::popcount(a.mask & b.mask); }

/// Anchor plus six pairwise-disjoint members kept in sorted order.
struct K6Bundle {
  Point anchor = 0;
  std::array<SixSet, 6> members{};

  CMask cover() const {
    CMask m = 0;
    for (const auto& s : members) m |= s.mask;
    return m;
  }

  bool operator==(const K6Bundle&) const = default;
  friend bool operator<(const K6Bundle& a, const K6Bundle& b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
  }
};

inline K6Bundle make_bundle(Point anchor, std::array<SixSet, 6> members) {
  std::sort(members.begin(), members.end());
  return {anchor, members};
}

/// C-points on the triple lines through an A-point.
inline CMask c_points_collinear_with(const CanonicalStructure& s, Point anchor) {
  CMask m = 0;
  for (int t : s.triple_through[static_cast<std::size_t>(anchor)])
    for (Point p : s.triple[static_cast<std::size_t>(t)])
      if (is_c_point(p)) m |= c_bit(p);
  return m;
}

/// Does `set` avoid the triple lines through `anchor` and meet each other triple line exactly once?
inline bool is_six_set_for(const CanonicalStructure& s, Point anchor, const SixSet& set) {
  if (set.size() != 6 || (set.mask & c_points_collinear_with(s, anchor))) return false;
  for (int t = 0; t < kTripleCount; ++t) {
    const auto& through = s.triple_through[static_cast<std::size_t>(anchor)];
    if (std::find(through.begin(), through.end(), t) != through.end()) continue;
    int hits = 0;
    for (Point p : s.triple[static_cast<std::size_t>(t)]) hits += set.contains(p);
    if (hits != 1) return false;
  }
  return true;
}

/// All 6-sets for `anchor`, sorted. Each available C-point lies on two of the
/// twelve triple lines missing the anchor, so a 6-set is a perfect matching of
/// those lines.
inline std::vector<SixSet> generate_six_sets(const CanonicalStructure& s, Point anchor) {
  if (!is_a_point(anchor)) throw std::invalid_argument("generate_six_sets: anchor must be an A-point");
  const CMask blocked = c_points_collinear_with(s, anchor);
  std::uint32_t anchor_lines = 0;
  for (int t : s.triple_through[static_cast<std::size_t>(anchor)]) anchor_lines |= 1u << t;
  const std::uint32_t all_lines = (1u << kTripleCount) - 1;

  std::vector<SixSet> out;
  auto rec = [&](auto&& self, std::uint32_t hit, CMask chosen) -> void {
    if (hit == all_lines) {
      out.push_back({chosen});
      return;
    }
    const int line = std::countr_zero(~hit & all_lines);
    for (Point p : s.triple[static_cast<std::size_t>(line)]) {
      if (!is_c_point(p) || (blocked & c_bit(p))) continue;
      const auto& through = s.triple_through[static_cast<std::size_t>(p)];
      const int other = through[0] == line ? through[1] : through[0];
      if (hit & (1u << other)) continue;
      self(self, hit | (1u << line) | (1u << other), chosen | c_bit(p));
    }
  };
  rec(rec, anchor_lines, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Permutation restricted to C, as a lookup table.
struct CAction {
  std::array<std::uint8_t, kLastC - kFirstC + 1> image{};

  explicit CAction(const Permutation& g) {
    for (Point p = kFirstC; p <= kLastC; ++p) {
      if (!is_c_point(g(p))) throw std::invalid_argument("CAction: permutation does not preserve C");
      image[static_cast<std::size_t>(p - kFirstC)] = static_cast<std::uint8_t>(g(p) - kFirstC);
    }
  }

  CMask operator()(CMask m) const {
    CMask r = 0;
    for (; m; m &= m - 1) r |= CMask{1} << image[static_cast<std::size_t>(std::countr_zero(m))];
    return r;
  }
};

inline SixSet map_six_set(const Permutation& g, const SixSet& s) { return {CAction(g)(s.mask)}; }

inline K6Bundle map_bundle(const Permutation& g, const CAction& on_c, const K6Bundle& b) {
  std::array<SixSet, 6> m{};
  for (std::size_t i = 0; i < 6; ++i) m[i] = {on_c(b.members[i].mask)};
  return make_bundle(g(b.anchor), m);
}

inline K6Bundle map_bundle(const Permutation& g, const K6Bundle& b) { return map_bundle(g, CAction(g), b); }

/// Every 6-clique of the disjointness graph on `candidates`, each once, in
/// lexicographic order of candidate indices.
inline std::vector<K6Bundle> enumerate_k6(const std::vector<SixSet>& candidates, Point anchor) {
  const std::size_t n = candidates.size();
  const std::size_t blocks = (n + 63) / 64;
  using Row = std::vector<std::uint64_t>;
  std::vector<Row> later_disjoint(n, Row(blocks, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(candidates[i].mask & candidates[j].mask)) later_disjoint[i][j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<K6Bundle> out;
  std::array<std::size_t, 6> pick{};
  std::vector<Row> pool(7, Row(blocks, 0));
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == 6) {
      std::array<SixSet, 6> members{};
      for (std::size_t k = 0; k < 6; ++k) members[k] = candidates[pick[k]];
      out.push_back(make_bundle(anchor, members));
      return;
    }
    const Row& cur = pool[depth];
    std::size_t remaining = 0;
    for (auto w : cur) remaining += static_cast<std::size_t>(std::popcount(w));
    if (remaining < 6 - depth) return;
    for (std::size_t b = 0; b < blocks; ++b)
      for (std::uint64_t w = cur[b]; w; w &= w - 1) {
        const std::size_t v = b * 64 + static_cast<std::size_t>(std::countr_zero(w));
        pick[depth] = v;
        Row& next = pool[depth + 1];
        for (std::size_t k = 0; k < blocks; ++k) next[k] = cur[k] & later_disjoint[v][k];
        self(self, depth + 1);
      }
  };
  for (std::size_t k = 0; k < n; ++k) pool[0][k / 64] |= std::uint64_t{1} << (k % 64);
  rec(rec, 0);
  return out;
}

struct BundleHash {
  std::size_t operator()(const K6Bundle& b) const {
    std::uint64_t h = static_cast<std::uint64_t>(b.anchor) * 0x9e3779b97f4a7c15ull;
    for (const auto& s : b.members) h = (h ^ s.mask) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

struct Orbit {
  K6Bundle representative;
  std::vector<std::size_t> members;  // indices into the input bundle list
};

struct OrbitPartition {
  std::vector<Orbit> orbits;  // ordered by representative
  std::size_t total = 0;
};

/// Splits `bundles` into orbits under the group whose elements are listed in
/// `group`. Representatives are the lexicographically smallest orbit member.
/// Throws if some image falls outside the input (the set is not closed).
inline OrbitPartition orbit_partition(const std::vector<K6Bundle>& bundles, const std::vector<Permutation>& group) {
  std::unordered_map<K6Bundle, std::size_t, BundleHash> index;
  index.reserve(bundles.size() * 2);
  for (std::size_t i = 0; i < bundles.size(); ++i)
    if (!index.emplace(bundles[i], i).second) throw std::invalid_argument("orbit_partition: duplicate bundle");

  std::vector<CAction> actions;
  actions.reserve(group.size());
  for (const auto& g : group) actions.emplace_back(g);

  std::vector<std::size_t> order(bundles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bundles[a] < bundles[b]; });

  OrbitPartition out;
  out.total = bundles.size();
  std::vector<bool> assigned(bundles.size(), false);
  for (std::size_t i : order) {
    if (assigned[i]) continue;
    Orbit orbit{bundles[i], {}};
    for (std::size_t k = 0; k < group.size(); ++k) {
      const K6Bundle img = map_bundle(group[k], actions[k], bundles[i]);
      auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("orbit_partition: bundle set is not closed under the group");
      if (!assigned[it->second]) {
        assigned[it->second] = true;
        orbit.members.push_back(it->second);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace pg10::a15
