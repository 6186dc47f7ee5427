#pragma once

// Extension search for the 90 single lines: starting from one K6 bundle U
// through point 1, try to add bundles through further A-points whose members
// meet every earlier member consistently. No complete chain means no
// weight-15 codeword.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pg10/canonical.hpp"
#include "pg10/errors.hpp"
#include "pg10/group.hpp"
#include "pg10/six_sets.hpp"

namespace pg10::a15 {

/// Built once, then shared read-only by all workers.
struct SearchContext {
  CanonicalStructure structure;
  std::array<std::vector<SixSet>, kLastA + 1> six_sets{};  // index by A-point

  static SearchContext build() {
    SearchContext ctx;
    ctx.structure = build_canonical_structure();
    for (Point p = kFirstA; p <= kLastA; ++p) ctx.six_sets[static_cast<std::size_t>(p)] = generate_six_sets(ctx.structure, p);
    return ctx;
  }

  const std::vector<SixSet>& six_sets_for(Point p) const { return six_sets.at(static_cast<std::size_t>(p)); }
};

struct MatchingPattern {
  int ones = 0;   // members met in a C-point
  int zeros = 0;  // members met in a B-point
  bool operator==(const MatchingPattern&) const = default;
};

/// A single line through q meets each single line through p once. The meet
/// is a B-point exactly when it lies on a heavy line through neither p nor q;
/// there are c such heavy lines, so the pattern is (6 - c ones, c zeros).
inline MatchingPattern matching_pattern(const CanonicalStructure& s, Point p, Point q) {
  if (p == q) throw std::invalid_argument("matching_pattern: anchors must differ");
  if (!is_a_point(p) || !is_a_point(q)) throw std::invalid_argument("matching_pattern: anchors must be A-points");
  int c = 0;
  for (int h = 0; h < kHeavyCount; ++h) c += !s.on_heavy(h, p) && !s.on_heavy(h, q);
  return {6 - c, c};
}

inline std::array<int, 6> matching_vector(const SixSet& s, const K6Bundle& bundle) {
  std::array<int, 6> m{};
  for (std::size_t i = 0; i < 6; ++i) m[i] = meet_count(s, bundle.members[i]);
  return m;
}

inline bool matches(const SixSet& s, const K6Bundle& bundle, MatchingPattern pattern) {
  int ones = 0;
  for (const auto& member : bundle.members) {
    const int k = meet_count(s, member);
    if (k > 1) return false;
    ones += k;
  }
  return ones == pattern.ones;
}

inline std::vector<SixSet> filter_by_matching(const std::vector<SixSet>& candidates, const K6Bundle& bundle,
                                              MatchingPattern pattern) {
  if (pattern.ones + pattern.zeros != 6) throw std::invalid_argument("filter_by_matching: pattern must total 6");
  std::vector<SixSet> out;
  for (const auto& s : candidates)
    if (matches(s, bundle, pattern)) out.push_back(s);
  return out;
}

/// Optional stronger condition: every member of `earlier` is also met in C by
/// exactly `pattern.ones` members of `later` (the remaining meets are B-points).
inline bool b_consistent(const K6Bundle& earlier, const K6Bundle& later, MatchingPattern pattern) {
  for (const auto& e : earlier.members) {
    int ones = 0;
    for (const auto& l : later.members) ones += meet_count(e, l) == 1;
    if (ones != pattern.ones) return false;
  }
  return true;
}

struct StagePlan {
  std::vector<Point> anchors{1, 10, 15, 11, 14};
  bool strict_b_consistency = false;

  bool operator==(const StagePlan&) const = default;
};

inline void validate_plan(const StagePlan& plan) {
  if (plan.anchors.size() < 2) throw std::invalid_argument("stage plan: need at least two anchors");
  if (plan.anchors.front() != 1) throw std::invalid_argument("stage plan: anchor order must begin with 1");
  std::vector<Point> sorted = plan.anchors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("stage plan: anchors must be distinct");
  for (Point p : plan.anchors)
    if (!is_a_point(p)) throw std::invalid_argument("stage plan: anchor " + std::to_string(p) + " is not in A");
}

/// chains[k] = number of consistent chains covering anchors[0..k]; chains[0] = 1.
struct RepresentativeResult {
  std::size_t index = 0;
  std::vector<std::uint64_t> chains;

  bool operator==(const RepresentativeResult&) const = default;
};

inline std::vector<std::uint64_t> extend_bundle(const SearchContext& ctx, const StagePlan& plan, const K6Bundle& first) {
  const std::size_t stages = plan.anchors.size();
  std::vector<std::uint64_t> chains(stages, 0);
  chains[0] = 1;

  // patterns[k][j]: pattern of stage k against earlier stage j.
  std::vector<std::vector<MatchingPattern>> patterns(stages);
  for (std::size_t k = 1; k < stages; ++k)
    for (std::size_t j = 0; j < k; ++j)
      patterns[k].push_back(matching_pattern(ctx.structure, plan.anchors[j], plan.anchors[k]));

  std::vector<K6Bundle> chain{first};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    std::vector<SixSet> pool = ctx.six_sets_for(plan.anchors[k]);
    for (std::size_t j = 0; j < k && !pool.empty(); ++j) pool = filter_by_matching(pool, chain[j], patterns[k][j]);
    if (pool.size() < 6) return;
    for (const auto& b : enumerate_k6(pool, plan.anchors[k])) {
      if (plan.strict_b_consistency) {
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) ok = b_consistent(chain[j], b, patterns[k][j]);
        if (!ok) continue;
      }
      ++chains[k];
      if (k + 1 < stages) {
        chain.push_back(b);
        self(self, k + 1);
        chain.pop_back();
      }
    }
  };
  rec(rec, 1);
  return chains;
}

// Checkpoint: one JSON object per completed representative, appended as it finishes.
inline nlohmann::json bundle_to_json(const K6Bundle& b) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : b.members) members.push_back(m.points());
  return members;
}

inline std::string checkpoint_line(const StagePlan& plan, const K6Bundle& rep, const RepresentativeResult& r) {
  nlohmann::json j;
  j["index"] = r.index;
  j["anchors"] = plan.anchors;
  j["strict_b_consistency"] = plan.strict_b_consistency;
  j["representative"] = bundle_to_json(rep);
  j["chains"] = r.chains;
  return j.dump();
}

/// Replays a checkpoint file; throws CheckpointError on anything unexpected.
inline std::map<std::size_t, RepresentativeResult> load_checkpoint(std::istream& in, const StagePlan& plan,
                                                                   const std::vector<K6Bundle>& representatives) {
  std::map<std::size_t, RepresentativeResult> done;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "checkpoint line " + std::to_string(lineno) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw CheckpointError(where + "unparseable (" + e.what() + ")");
    }
    try {
      RepresentativeResult r;
      r.index = j.at("index").get<std::size_t>();
      const auto anchors = j.at("anchors").get<std::vector<Point>>();
      const bool strict = j.at("strict_b_consistency").get<bool>();
      r.chains = j.at("chains").get<std::vector<std::uint64_t>>();
      if (anchors != plan.anchors || strict != plan.strict_b_consistency)
        throw CheckpointError(where + "written under a different stage plan");
      if (r.index >= representatives.size()) throw CheckpointError(where + "index out of range");
      if (j.at("representative") != bundle_to_json(representatives[r.index]))
        throw CheckpointError(where + "representative does not match index " + std::to_string(r.index));
      if (r.chains.size() != plan.anchors.size() || r.chains.front() != 1)
        throw CheckpointError(where + "malformed chain counts");
      if (done.count(r.index)) throw CheckpointError(where + "duplicate index " + std::to_string(r.index));
      done.emplace(r.index, std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw CheckpointError(where + "missing or mistyped field (" + e.what() + ")");
    }
  }
  return done;
}

struct SearchOptions {
  unsigned workers = 1;
  std::optional<std::string> checkpoint_path;
};

struct SearchOutcome {
  StagePlan plan;
  std::vector<RepresentativeResult> results;  // by representative index
  std::vector<std::uint64_t> totals;          // summed chains per stage
  std::size_t resumed = 0;                    // results taken from a checkpoint

  /// Number of representatives with at least one chain reaching `stage`.
  std::size_t extending_to(std::size_t stage) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const RepresentativeResult& r) {
      return stage < r.chains.size() && r.chains[stage] > 0;
    }));
  }

  bool a15_verified() const { return !totals.empty() && totals.back() == 0; }
};

/// Runs every representative through the stage plan. Work items are
/// independent; results are stored by index so the outcome does not depend
/// on scheduling.
inline SearchOutcome run_extension_search(const SearchContext& ctx, const std::vector<K6Bundle>& representatives,
                                          const StagePlan& plan = {}, const SearchOptions& options = {}) {
  validate_plan(plan);
  for (const auto& r : representatives)
    if (r.anchor != plan.anchors.front()) throw std::invalid_argument("run_extension_search: representative anchored elsewhere");

  SearchOutcome out;
  out.plan = plan;
  out.results.resize(representatives.size());
  std::vector<bool> have(representatives.size(), false);

  std::ofstream checkpoint;
  if (options.checkpoint_path) {
    std::ifstream prior(*options.checkpoint_path);
    if (prior) {
      for (auto& [idx, r] : load_checkpoint(prior, plan, representatives)) {
        out.results[idx] = r;
        have[idx] = true;
        ++out.resumed;
      }
    }
    checkpoint.open(*options.checkpoint_path, std::ios::app);
    if (!checkpoint) throw CheckpointError("cannot open checkpoint " + *options.checkpoint_path);
  }

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (!have[i]) todo.push_back(i);

  std::atomic<std::size_t> next{0};
  std::mutex write_mutex;
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      for (std::size_t t; (t = next.fetch_add(1)) < todo.size();) {
        const std::size_t i = todo[t];
        RepresentativeResult r{i, extend_bundle(ctx, plan, representatives[i])};
        std::lock_guard lock(write_mutex);
        if (checkpoint.is_open()) checkpoint << checkpoint_line(plan, representatives[i], r) << '\n' << std::flush;
        out.results[i] = std::move(r);
      }
    } catch (...) {
      std::lock_guard lock(write_mutex);
      if (!failure) failure = std::current_exception();
      next = todo.size();
    }
  };

  const unsigned n = std::max(1u, options.workers);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  out.totals.assign(plan.anchors.size(), 0);
  for (const auto& r : out.results)
    for (std::size_t k = 0; k < r.chains.size(); ++k) out.totals[k] += r.chains[k];
  return out;
}

/// Everything from the structure to the final chain count.
struct PipelineResult {
  std::size_t six_set_count = 0;
  std::size_t k6_count = 0;
  std::size_t group_order = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<K6Bundle> representatives;
  SearchOutcome outcome;
};

struct OrbitStage {
  std::vector<SixSet> six_sets;
  std::vector<K6Bundle> bundles;
  std::vector<GroupElement> stabilizer;
  OrbitPartition partition;
};

/// L_1, its K6 bundles and their orbits under the point-1 stabilizer.
inline OrbitStage compute_orbits(const SearchContext& ctx) {
  OrbitStage st;
  st.six_sets = ctx.six_sets_for(1);
  st.bundles = enumerate_k6(st.six_sets, 1);
  st.stabilizer = generate_group(stabilizer_generators(ctx.structure));
  std::vector<Permutation> perms;
  for (const auto& g : st.stabilizer) perms.push_back(g.perm);
  st.partition = orbit_partition(st.bundles, perms);
  return st;
}

inline PipelineResult run_pipeline(const SearchContext& ctx, const StagePlan& plan = {}, const SearchOptions& options = {}) {
  validate_plan(plan);
  OrbitStage st = compute_orbits(ctx);
  PipelineResult res;
  res.six_set_count = st.six_sets.size();
  res.k6_count = st.bundles.size();
  res.group_order = st.stabilizer.size();
  for (const auto& o : st.partition.orbits) {
    res.representatives.push_back(o.representative);
    res.orbit_sizes.push_back(o.members.size());
  }
  res.outcome = run_extension_search(ctx, res.representatives, plan, options);
  return res;
}

}  // namespace pg10::a15
