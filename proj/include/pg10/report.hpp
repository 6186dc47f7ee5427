#pragma once

// Machine-readable output of the weight-15 search: a JSON summary and a
// per-orbit CSV trace. All numbers are integers.

#include <cstdint>
#include <ostream>
#include <string>

#include <json.hpp>

#include "pg10/search.hpp"

namespace pg10 {

inline constexpr const char* kVersion = "0.1.0";

namespace a15 {

inline std::string stage_name(std::size_t stage) {
  static const std::string letters = "UVWXYZ";
  if (stage < letters.size()) return letters.substr(0, stage + 1);
  return "stage_" + std::to_string(stage + 1);
}

/// Known targets for the default plan; the search module gates on these.
constexpr std::size_t kExpectedSixSets = 344;
constexpr std::size_t kExpectedK6 = 42496;
constexpr std::size_t kExpectedOrbits = 1021;

inline bool milestones_hold(const PipelineResult& r) {
  return r.six_set_count == kExpectedSixSets && r.k6_count == kExpectedK6 &&
         r.representatives.size() == kExpectedOrbits && r.outcome.a15_verified();
}

inline nlohmann::json search_report(const PipelineResult& r, std::int64_t wall_time_ms) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = {{"anchor_order", r.outcome.plan.anchors},
                 {"strict_b_consistency", r.outcome.plan.strict_b_consistency}};
  j["six_set_count"] = r.six_set_count;
  j["k6_count"] = r.k6_count;
  j["orbit_count"] = r.representatives.size();
  j["stabilizer_order"] = r.group_order;

  nlohmann::json stages = nlohmann::json::object();
  const auto& totals = r.outcome.totals;
  for (std::size_t k = 1; k < totals.size(); ++k) stages[stage_name(k)] = totals[k];
  if (totals.size() >= 3) stages["distinct_U"] = r.outcome.extending_to(2);
  j["per_stage_counts"] = stages;
  j["a15_verified"] = r.outcome.a15_verified();
  j["milestones_hold"] = milestones_hold(r);
  j["wall_time"] = wall_time_ms;
  return j;
}

inline std::string bundle_text(const K6Bundle& b) {
  std::string s;
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (i) s += '|';
    const auto pts = b.members[i].points();
    for (std::size_t k = 0; k < pts.size(); ++k) s += (k ? " " : "") + std::to_string(pts[k]);
  }
  return s;
}

// index,orbit_size,representative,<stage columns>
inline void write_trace_csv(std::ostream& os, const PipelineResult& r) {
  os << "index,orbit_size,representative";
  const std::size_t stages = r.outcome.plan.anchors.size();
  for (std::size_t k = 1; k < stages; ++k) os << ',' << stage_name(k);
  os << '\n';
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    os << i << ',' << r.orbit_sizes[i] << ',' << bundle_text(r.representatives[i]);
    for (std::size_t k = 1; k < stages; ++k) os << ',' << r.outcome.results[i].chains[k];
    os << '\n';
  }
}

}  // namespace a15
}  // namespace pg10
