#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "pg10/gf2.hpp"

using namespace pg10;

namespace {

BinaryWord word_of(const std::vector<int>& bits) {
  BinaryWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) w.set(i, bits[i] != 0);
  return w;
}

// GF(2) rank by plain elimination on bool rows.
std::size_t naive_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<bool>> bool_rows(const IncidenceStructure& s) {
  std::vector<std::vector<bool>> rows;
  for (const auto& r : incidence_matrix(s)) rows.emplace_back(r.begin(), r.end());
  return rows;
}

// All sums of subsets of the lines, without any basis reduction.
std::set<std::vector<int>> span_by_subsets(const IncidenceStructure& s) {
  std::set<std::vector<int>> out;
  const auto a = incidence_matrix(s);
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    std::vector<int> v(static_cast<std::size_t>(s.point_count), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] ^= a[i][j];
    out.insert(v);
  }
  return out;
}

std::vector<int> as_ints(const BinaryWord& w) {
  std::vector<int> v(w.length());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w.get(i);
  return v;
}

const LinearCode& fano_code() {
  static const LinearCode c = plane_code(fano_plane());
  return c;
}

const std::vector<BinaryWord>& fano_words() {
  static const auto w = enumerate_codewords(fano_code());
  return w;
}

}  // namespace

TEST(BinaryWord, Basics) {
  BinaryWord w(70);
  EXPECT_EQ(w.weight(), 0u);
  EXPECT_TRUE(w.is_zero());
  w.set(0);
  w.set(69);
  w.flip(3);
  EXPECT_EQ(w.weight(), 3u);
  EXPECT_EQ(w.support(), (std::vector<int>{0, 3, 69}));
  EXPECT_EQ(w.lowest(), 0u);
  BinaryWord v(70);
  v.set(3);
  EXPECT_TRUE(w.dot(v));
  EXPECT_EQ((w + v).weight(), 2u);
  EXPECT_THROW(w ^= BinaryWord(71), std::invalid_argument);
}

TEST(BinaryWord, HexRoundTrip) {
  const auto w = word_of({1, 0, 0, 0, 0, 1, 1});
  EXPECT_EQ(w.to_hex(), "16");
  EXPECT_EQ(BinaryWord::from_hex(7, "16"), w);
  for (const auto& x : fano_words()) EXPECT_EQ(BinaryWord::from_hex(7, x.to_hex()), x);
  EXPECT_THROW(BinaryWord::from_hex(7, "zz"), ParseError);
  EXPECT_THROW(BinaryWord::from_hex(7, "161"), ParseError);
}

TEST(RowSpace, Dimensions) {
  EXPECT_EQ(fano_code().dimension(), 4u);
  EXPECT_EQ(naive_rank(bool_rows(fano_plane())), 4u);
  const auto p3 = construct_plane_prime(3);
  EXPECT_EQ(plane_code(p3).dimension(), naive_rank(bool_rows(p3)));
  EXPECT_EQ(plane_code(p3).dimension(), 12u);
  const auto p5 = construct_plane_prime(5);
  EXPECT_EQ(plane_code(p5).dimension(), naive_rank(bool_rows(p5)));
}

TEST(RowSpace, EmptyAndMixed) {
  const auto c = row_space(9, {});
  EXPECT_EQ(c.dimension(), 0u);
  const auto words = enumerate_codewords(c);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_TRUE(words.front().is_zero());
  EXPECT_THROW(row_space({BinaryWord(5), BinaryWord(6)}), std::invalid_argument);
}

TEST(RowSpace, GeneratorsInSpan) {
  for (const auto& g : fano_code().generators()) EXPECT_TRUE(fano_code().contains(g));
}

TEST(Enumerate, FanoWordsMatchSubsetSums) {
  const auto oracle = span_by_subsets(fano_plane());
  ASSERT_EQ(fano_words().size(), 16u);
  ASSERT_EQ(oracle.size(), 16u);
  std::set<std::vector<int>> got;
  for (const auto& w : fano_words()) got.insert(as_ints(w));
  EXPECT_EQ(got, oracle);
  EXPECT_TRUE(std::is_sorted(fano_words().begin(), fano_words().end()));
}

TEST(Enumerate, FanoHistogram) {
  const std::map<std::size_t, std::size_t> want{{0, 1}, {3, 7}, {4, 7}, {7, 1}};
  EXPECT_EQ(weight_histogram(fano_words()), want);
}

TEST(Enumerate, GuardsDimension) {
  std::vector<BinaryWord> gens;
  for (std::size_t i = 0; i < 25; ++i) {
    BinaryWord w(25);
    w.set(i);
    gens.push_back(w);
  }
  EXPECT_THROW(enumerate_codewords(row_space(gens)), std::invalid_argument);
}

TEST(Dual, Fano) {
  const auto d = dual_code(fano_code());
  EXPECT_EQ(d.dimension(), 3u);
  EXPECT_EQ(fano_code().dimension() + d.dimension(), 7u);
  const std::map<std::size_t, std::size_t> want{{0, 1}, {4, 7}};
  EXPECT_EQ(weight_histogram(enumerate_codewords(d)), want);
  for (const auto& y : enumerate_codewords(d))
    for (const auto& x : fano_words()) EXPECT_FALSE(x.dot(y));
}

TEST(Dual, DirectOrthogonalComplement) {
  // Oracle: test every vector of GF(2)^7 against the lines.
  const auto lines = line_words(fano_plane());
  std::size_t count = 0;
  for (unsigned v = 0; v < 128; ++v) {
    BinaryWord x(7);
    for (std::size_t i = 0; i < 7; ++i) x.set(i, v >> i & 1);
    const bool orth = std::none_of(lines.begin(), lines.end(), [&](const BinaryWord& l) { return x.dot(l); });
    count += orth;
    EXPECT_EQ(orth, dual_code(fano_code()).contains(x));
  }
  EXPECT_EQ(count, 8u);
}

TEST(Dual, Involution) {
  const auto dd = dual_code(dual_code(fano_code()));
  EXPECT_TRUE(is_subcode(dd, fano_code()));
  EXPECT_TRUE(is_subcode(fano_code(), dd));
  const auto p3 = plane_code(construct_plane_prime(3));
  const auto dd3 = dual_code(dual_code(p3));
  EXPECT_TRUE(is_subcode(dd3, p3) && is_subcode(p3, dd3));
}

TEST(Dual, ContainedInCode) { EXPECT_TRUE(is_subcode(dual_code(fano_code()), fano_code())); }

TEST(Intersection, CodeAndDual) {
  const auto i = intersect_codes(fano_code(), dual_code(fano_code()));
  EXPECT_EQ(i.dimension(), fano_code().dimension() - 1);
  EXPECT_EQ(i.dimension(), 3u);
}

TEST(Intersection, AgainstEnumeration) {
  const auto p3 = construct_plane_prime(3);
  const auto c = plane_code(p3);
  const auto d = dual_code(c);
  const auto i = intersect_codes(c, d);
  std::size_t count = 0;
  for (const auto& w : enumerate_codewords(d)) count += c.contains(w);
  EXPECT_EQ(std::size_t{1} << i.dimension(), count);
}

TEST(CodeProperties, WeightIdentityAllPairs) {
  for (const auto& u : fano_words())
    for (const auto& v : fano_words()) EXPECT_EQ((u + v).weight(), u.weight() + v.weight() - 2 * (u & v).weight());
}

TEST(CodeProperties, WeightParity) {
  for (const auto& w : fano_words()) EXPECT_TRUE(w.weight() % 4 == 0 || w.weight() % 4 == 3) << w.bits();
}

TEST(CodeProperties, MinimumWeightWordsAreLines) {
  std::set<BinaryWord> weight3;
  for (const auto& w : fano_words()) {
    EXPECT_NE(w.weight(), 1u);
    EXPECT_NE(w.weight(), 2u);
    if (w.weight() == 3) weight3.insert(w);
  }
  const auto lines = line_words(fano_plane());
  EXPECT_EQ(weight3, std::set<BinaryWord>(lines.begin(), lines.end()));
}

TEST(CodeProperties, DistributionSymmetric) {
  const auto h = weight_histogram(fano_words());
  for (std::size_t i = 0; i <= 7; ++i) {
    const auto a = h.count(i) ? h.at(i) : 0;
    const auto b = h.count(7 - i) ? h.at(7 - i) : 0;
    EXPECT_EQ(a, b);
  }
}

TEST(LineSums, Parity) {
  const auto lines = line_words(fano_plane());
  EXPECT_FALSE(is_even_line_sum(fano_code(), lines[0]));
  EXPECT_TRUE(is_even_line_sum(fano_code(), lines[0] + lines[1]));
  EXPECT_EQ((lines[0] + lines[1]).weight(), 4u);
  EXPECT_FALSE(is_even_line_sum(fano_code(), BinaryWord::ones(7)));
  EXPECT_THROW(is_even_line_sum(fano_code(), word_of({1, 1, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST(LineSums, ParityMatchesSubsetSize) {
  // Oracle: record the parity of every subset of lines producing each word.
  const auto lines = line_words(fano_plane());
  std::map<BinaryWord, std::set<int>> parities;
  for (unsigned mask = 0; mask < 128; ++mask) {
    BinaryWord x(7);
    for (std::size_t i = 0; i < 7; ++i)
      if (mask >> i & 1) x ^= lines[i];
    parities[x].insert(std::popcount(mask) % 2);
  }
  for (const auto& [x, par] : parities) {
    ASSERT_EQ(par.size(), 1u) << x.bits();
    EXPECT_EQ(is_even_line_sum(fano_code(), x), *par.begin() == 0) << x.bits();
  }
}

TEST(OddIntersection, Fano) {
  const auto f = fano_plane();
  const auto lines = line_words(f);
  EXPECT_TRUE(odd_intersection_predicate(f, lines[2]));
  EXPECT_FALSE(odd_intersection_predicate(f, lines[2] + lines[5]));
  EXPECT_TRUE(odd_intersection_predicate(f, BinaryWord::ones(7)));
  for (const auto& w : fano_words()) EXPECT_NE(odd_intersection_predicate(f, w), is_even_line_sum(fano_code(), w));
  EXPECT_THROW(odd_intersection_predicate(f, word_of({1, 0, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST(Hyperovals, Fano) {
  const auto f = fano_plane();
  // Oracle: every 4-subset with no three collinear.
  std::set<PointSet> brute;
  for (unsigned mask = 0; mask < 128; ++mask) {
    if (std::popcount(mask) != 4) continue;
    bool ok = true;
    for (const auto& l : f.lines) {
      int hits = 0;
      for (int p : l) hits += mask >> p & 1;
      ok = ok && hits < 3;
    }
    if (ok) {
      PointSet s;
      for (int p = 0; p < 7; ++p)
        if (mask >> p & 1) s.push_back(p);
      brute.insert(s);
    }
  }
  const auto found = find_hyperovals(f);
  EXPECT_EQ(found.size(), 7u);
  EXPECT_EQ(std::set<PointSet>(found.begin(), found.end()), brute);

  std::set<PointSet> weight4;
  for (const auto& w : fano_words())
    if (w.weight() == 4) weight4.insert(w.support());
  EXPECT_EQ(weight4, brute);

  for (const auto& h : found) {
    PointSet complement;
    for (int p = 0; p < 7; ++p)
      if (!std::count(h.begin(), h.end(), p)) complement.push_back(p);
    EXPECT_TRUE(std::count(f.lines.begin(), f.lines.end(), complement));
  }
}

TEST(Hyperovals, OddOrderRejected) { EXPECT_THROW(find_hyperovals(construct_plane_prime(3)), std::invalid_argument); }

TEST(CodewordFile, RoundTrip) {
  std::stringstream ss;
  write_codewords(ss, fano_code(), fano_words());
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "7 4 16");
  ss.seekg(0);
  const auto back = read_codewords(ss);
  EXPECT_EQ(back.words, fano_words());
}
