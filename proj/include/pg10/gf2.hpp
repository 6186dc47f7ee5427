#pragma once

// Binary linear codes: bit-packed words, row-reduced bases, duals and
// the plane-specific predicates built on them.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg10/errors.hpp"
#include "pg10/incidence.hpp"

namespace pg10 {

/// Fixed-length vector over GF(2); bit i is coordinate (point) i.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::size_t length) : length_(length), blocks_((length + 63) / 64, 0) {}

  static BinaryWord from_points(std::size_t length, const std::vector<int>& points) {
    BinaryWord w(length);
    for (int p : points) w.set(static_cast<std::size_t>(p));
    return w;
  }

  static BinaryWord ones(std::size_t length) {
    BinaryWord w(length);
    for (std::size_t i = 0; i < length; ++i) w.set(i);
    return w;
  }

  std::size_t length() const { return length_; }

  bool get(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
      blocks_[i / 64] |= bit;
    else
      blocks_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { blocks_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
    return w;
  }

  bool is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
  }

  // Index of the lowest set bit, or length() if zero.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[k]));
    return length_;
  }

  BinaryWord& operator^=(const BinaryWord& o) {
    check_same(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] ^= o.blocks_[k];
    return *this;
  }
  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a ^= b; }

  friend BinaryWord operator&(BinaryWord a, const BinaryWord& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.blocks_.size(); ++k) a.blocks_[k] &= b.blocks_[k];
    return a;
  }

  /// Inner product mod 2.
  bool dot(const BinaryWord& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < blocks_.size(); ++k) acc ^= blocks_[k] & o.blocks_[k];
    return std::popcount(acc) & 1;
  }

  std::vector<int> support() const {
    std::vector<int> pts;
    for (std::size_t i = 0; i < length_; ++i)
      if (get(i)) pts.push_back(static_cast<int>(i));
    return pts;
  }

  // Bit string with coordinate 0 first.
  std::string bits() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  /// Hex digit k encodes coordinates 4k..4k+3, coordinate 4k in the low bit.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (std::size_t k = 0; k < (length_ + 3) / 4; ++k) {
      unsigned nib = 0;
      for (std::size_t b = 0; b < 4 && 4 * k + b < length_; ++b) nib |= static_cast<unsigned>(get(4 * k + b)) << b;
      s.push_back(digits[nib]);
    }
    return s;
  }

  static BinaryWord from_hex(std::size_t length, const std::string& hex) {
    if (hex.size() != (length + 3) / 4) throw ParseError("BinaryWord: hex length mismatch for '" + hex + "'");
    BinaryWord w(length);
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const char c = hex[k];
      unsigned nib;
      if (c >= '0' && c <= '9')
        nib = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nib = static_cast<unsigned>(c - 'a' + 10);
      else
        throw ParseError("BinaryWord: bad hex digit in '" + hex + "'");
      for (std::size_t b = 0; b < 4; ++b) {
        if (!((nib >> b) & 1u)) continue;
        if (4 * k + b >= length) throw ParseError("BinaryWord: bits set beyond length in '" + hex + "'");
        w.set(4 * k + b);
      }
    }
    return w;
  }

  bool operator==(const BinaryWord&) const = default;

  // Orders as bit strings (coordinate 0 most significant).
  friend bool operator<(const BinaryWord& a, const BinaryWord& b) { return a.bits() < b.bits(); }

 private:
  void check_same(const BinaryWord& o) const {
    if (o.length_ != length_) throw std::invalid_argument("BinaryWord: length mismatch");
  }

  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Row space of a set of generators, kept in reduced row echelon form.
class LinearCode {
 public:
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BinaryWord>& generators() const { return generators_; }
  const std::vector<BinaryWord>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces x against the basis; zero iff x is in the code.
  BinaryWord reduce(BinaryWord x) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (x.get(pivots_[i])) x ^= basis_[i];
    return x;
  }

  bool contains(const BinaryWord& x) const { return x.length() == length_ && reduce(x).is_zero(); }

  friend LinearCode row_space(std::size_t length, const std::vector<BinaryWord>& generators);

 private:
  std::size_t length_ = 0;
  std::vector<BinaryWord> generators_;
  std::vector<BinaryWord> basis_;
  std::vector<std::size_t> pivots_;
};

inline LinearCode row_space(std::size_t length, const std::vector<BinaryWord>& generators) {
  for (const auto& g : generators)
    if (g.length() != length) throw std::invalid_argument("row_space: generators of mixed lengths");

  LinearCode c;
  c.length_ = length;
  c.generators_ = generators;
  std::vector<BinaryWord> rows = generators;
  std::size_t r = 0;
  for (std::size_t col = 0; col < length && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
    c.pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  c.basis_ = std::move(rows);
  return c;
}

inline LinearCode row_space(const std::vector<BinaryWord>& generators) {
  if (generators.empty()) throw std::invalid_argument("row_space: length needed for an empty generator list");
  return row_space(generators.front().length(), generators);
}

inline std::vector<BinaryWord> line_words(const IncidenceStructure& plane) {
  std::vector<BinaryWord> rows;
  for (const auto& line : plane.lines)
    rows.push_back(BinaryWord::from_points(static_cast<std::size_t>(plane.point_count), line));
  return rows;
}

inline LinearCode plane_code(const IncidenceStructure& plane) {
  return row_space(static_cast<std::size_t>(plane.point_count), line_words(plane));
}

constexpr std::size_t kMaxEnumerableDimension = 24;

/// All 2^dim codewords, sorted as bit strings.
inline std::vector<BinaryWord> enumerate_codewords(const LinearCode& c) {
  if (c.dimension() > kMaxEnumerableDimension)
    throw std::invalid_argument("enumerate_codewords: dimension " + std::to_string(c.dimension()) + " exceeds 24");
  const auto& basis = c.basis();
  std::vector<BinaryWord> words;
  words.reserve(std::size_t{1} << basis.size());
  BinaryWord cur(c.length());
  words.push_back(cur);
  // Gray code walk.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    words.push_back(cur);
  }
  std::sort(words.begin(), words.end(), [](const BinaryWord& a, const BinaryWord& b) { return a.bits() < b.bits(); });
  return words;
}

/// Orthogonal complement. dim = length - dim(c).
inline LinearCode dual_code(const LinearCode& c) {
  const auto& basis = c.basis();
  const auto& piv = c.pivots();
  std::vector<bool> is_pivot(c.length(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<BinaryWord> gens;
  for (std::size_t f = 0; f < c.length(); ++f) {
    if (is_pivot[f]) continue;
    BinaryWord w(c.length());
    w.set(f);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].get(f)) w.set(piv[i]);
    gens.push_back(std::move(w));
  }
  return row_space(c.length(), gens);
}

/// Zassenhaus: reduce [u|u] for u in U and [v|0] for v in V; rows whose left
/// half vanishes carry a basis of U ∩ V in their right half.
inline LinearCode intersect_codes(const LinearCode& u, const LinearCode& v) {
  const std::size_t n = u.length();
  if (v.length() != n) throw std::invalid_argument("intersect_codes: length mismatch");
  std::vector<BinaryWord> rows;
  for (const auto& b : u.basis()) {
    BinaryWord w(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      if (b.get(i)) {
        w.set(i);
        w.set(n + i);
      }
    rows.push_back(std::move(w));
  }
  for (const auto& b : v.basis()) {
    BinaryWord w(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      if (b.get(i)) w.set(i);
    rows.push_back(std::move(w));
  }
  LinearCode combined = row_space(2 * n, rows);
  std::vector<BinaryWord> gens;
  for (const auto& b : combined.basis()) {
    if (b.lowest() < n) continue;
    BinaryWord w(n);
    for (std::size_t i = 0; i < n; ++i)
      if (b.get(n + i)) w.set(i);
    gens.push_back(std::move(w));
  }
  return row_space(n, gens);
}

inline bool is_subcode(const LinearCode& sub, const LinearCode& super) {
  return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const BinaryWord& b) { return super.contains(b); });
}

/// For x in C: true iff x lies in the dual, i.e. is orthogonal to every generator.
/// For a plane code this is exactly "x is a sum of an even number of lines".
inline bool is_even_line_sum(const LinearCode& c, const BinaryWord& x) {
  if (!c.contains(x)) throw std::invalid_argument("is_even_line_sum: word is not in the code");
  return std::none_of(c.generators().begin(), c.generators().end(), [&](const BinaryWord& g) { return g.dot(x); });
}

/// True iff every line of the plane meets x in an odd number of points.
inline bool odd_intersection_predicate(const IncidenceStructure& plane, const BinaryWord& x) {
  const auto lines = line_words(plane);
  if (!plane_code(plane).contains(x)) throw std::invalid_argument("odd_intersection_predicate: word is not in the plane's code");
  return std::all_of(lines.begin(), lines.end(), [&](const BinaryWord& l) { return (l & x).weight() % 2 == 1; });
}

/// Weight multiset {weight -> count}.
inline std::map<std::size_t, std::size_t> weight_histogram(const std::vector<BinaryWord>& words) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& w : words) ++h[w.weight()];
  return h;
}

/// All (n+2)-subsets with no three points on a common line. Even order only.
inline std::vector<PointSet> find_hyperovals(const IncidenceStructure& plane) {
  if (plane.order % 2) throw std::invalid_argument("find_hyperovals: hyperovals need an even order");
  const int np = plane.point_count;
  const std::size_t target = static_cast<std::size_t>(plane.order + 2);

  // line_of[a][b] = index of the line joining a and b.
  std::vector<std::vector<int>> line_of(static_cast<std::size_t>(np), std::vector<int>(static_cast<std::size_t>(np), -1));
  for (std::size_t li = 0; li < plane.lines.size(); ++li)
    for (int a : plane.lines[li])
      for (int b : plane.lines[li])
        if (a != b) line_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(li);

  std::vector<PointSet> out;
  PointSet cur;
  std::vector<int> used_lines(plane.lines.size(), 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (cur.size() == target) {
      out.push_back(cur);
      return;
    }
    for (int p = next; p < np; ++p) {
      if (cur.size() + static_cast<std::size_t>(np - p) < target) return;
      bool ok = true;
      for (int q : cur)
        if (used_lines[static_cast<std::size_t>(line_of[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int q : cur) ++used_lines[static_cast<std::size_t>(line_of[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])];
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
      for (int q : cur) --used_lines[static_cast<std::size_t>(line_of[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])];
    }
  };
  rec(rec, 0);
  return out;
}

// Codeword list format: header "N dim count", then one hex word per line.
inline void write_codewords(std::ostream& os, const LinearCode& c, const std::vector<BinaryWord>& words) {
  os << c.length() << ' ' << c.dimension() << ' ' << words.size() << '\n';
  for (const auto& w : words) os << w.to_hex() << '\n';
}

struct CodewordList {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::vector<BinaryWord> words;
};

inline CodewordList read_codewords(std::istream& is) {
  CodewordList out;
  std::size_t count = 0;
  std::string header;
  if (!std::getline(is, header)) throw ParseError("codeword list: missing header");
  std::istringstream hs(header);
  if (!(hs >> out.length >> out.dimension >> count)) throw ParseError("codeword list: bad header '" + header + "'");
  std::string line;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(is, line)) throw ParseError("codeword list: truncated");
    out.words.push_back(BinaryWord::from_hex(out.length, line));
  }
  return out;
}

}  // namespace pg10
