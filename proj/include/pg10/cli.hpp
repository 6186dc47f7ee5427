#pragma once

// Command front end. Each command writes its artifact to the configured
// output (or `out`), diagnostics to `err`, and returns the process exit code.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pg10/gf2.hpp"
#include "pg10/group.hpp"
#include "pg10/incidence.hpp"
#include "pg10/report.hpp"
#include "pg10/search.hpp"
#include "pg10/weight_enum.hpp"

namespace pg10::cli {

enum class Command { VerifyPlane, EnumerateCode, WeightTable, MacWilliams, VerifyTables, SearchA15, SixSets, Orbits };

struct RunConfig {
  Command command = Command::SearchA15;
  unsigned workers = 1;
  std::optional<std::string> output_path;
  std::optional<std::string> checkpoint_path;
  std::optional<std::string> trace_path;
  bool strict_b_consistency = false;
  std::vector<int> anchor_order{1, 10, 15, 11, 14};

  // Plane source for verify-plane / enumerate-code.
  int order = 2;
  std::optional<std::string> input_path;

  int anchor = 1;                    // six-sets
  std::string coefficients;          // macwilliams, comma separated A_0..A_N
  std::optional<std::string> code_size;
  bool paired = false;               // weight-table
};

inline void validate(const RunConfig& c) {
  if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
  a15::validate_plan({c.anchor_order, c.strict_b_consistency});
}

namespace detail {

// Writes to the output file when one is configured, else to `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : os_(&fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw std::runtime_error("cannot open " + *path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

inline IncidenceStructure load_plane(const RunConfig& c) {
  if (c.input_path) {
    std::ifstream in(*c.input_path);
    if (!in) throw std::runtime_error("cannot read " + *c.input_path);
    return read_structure(in);
  }
  return c.order == 2 ? fano_plane() : construct_plane_prime(c.order);
}

inline std::vector<BigInt> parse_coefficients(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad coefficient '" + tok + "'");
    out.emplace_back(tok);
  }
  if (out.empty()) throw std::invalid_argument("no coefficients given");
  return out;
}

}  // namespace detail

inline int cmd_verify_plane(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const IncidenceStructure s = detail::load_plane(c);
  const ValidationReport rep = validate_projective_plane(s);
  out << "order " << s.order << ", " << s.point_count << " points, " << s.line_count() << " lines\n";
  for (int axiom = 0; axiom <= 4; ++axiom) out << "axiom " << axiom << ": " << rep.count(axiom) << " violations\n";
  for (const auto& v : rep.violations) err << "axiom " << v.axiom << ": " << v.detail << '\n';
  if (rep.ok()) {
    out << "|det A| = " << BigInt(abs(incidence_determinant(s))).str() << ", formula " << incidence_determinant_formula(s.order).str()
        << '\n';
    if (c.output_path) {
      detail::Sink sink(c.output_path, out);
      write_structure(sink.stream(), s);
    }
  }
  out << (rep.ok() ? "valid projective plane\n" : "NOT a projective plane\n");
  return rep.ok() ? 0 : 1;
}

inline int cmd_enumerate_code(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const IncidenceStructure s = detail::load_plane(c);
  const LinearCode code = plane_code(s);
  if (code.dimension() > kMaxEnumerableDimension) {
    err << "code dimension " << code.dimension() << " exceeds enumeration limit " << kMaxEnumerableDimension << '\n';
    return 1;
  }
  const auto words = enumerate_codewords(code);
  detail::Sink sink(c.output_path, out);
  write_codewords(sink.stream(), code, words);
  for (const auto& [w, n] : weight_histogram(words)) err << "A_" << w << " = " << n << '\n';
  return 0;
}

inline int cmd_weight_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const WeightEnumerator w = solve_weight_distribution(build_pg10_system(), standard_search_pins());
  {
    detail::Sink sink(c.output_path, out);
    if (c.paired)
      write_weight_pairs(sink.stream(), w);
    else
      write_weight_csv(sink.stream(), w);
  }
  for (const auto& [i, expected] : reference_weight_rows()) {
    if (w.coefficients[static_cast<std::size_t>(i)] != expected ||
        w.coefficients[static_cast<std::size_t>(kPg10Length - i)] != expected) {
      err << "mismatch at row " << i << ": expected " << expected.str() << ", solved "
          << w.coefficients[static_cast<std::size_t>(i)].str() << '\n';
      return 1;
    }
  }
  return 0;
}

inline int cmd_macwilliams(const RunConfig& c, std::ostream& out, std::ostream& err) {
  WeightEnumerator w{detail::parse_coefficients(c.coefficients)};
  const BigInt size = c.code_size ? BigInt(*c.code_size) : w.total();
  try {
    const WeightEnumerator d = macwilliams_transform(w, size);
    detail::Sink sink(c.output_path, out);
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) sink.stream() << (i ? "," : "") << d.coefficients[i].str();
    sink.stream() << '\n';
    return 0;
  } catch (const NonIntegralResult& e) {
    err << e.what() << '\n';
    return 1;
  }
}

inline int cmd_verify_tables(const RunConfig& c, std::ostream& out, std::ostream& err,
                             const a15::TauTable& printed = a15::kPrintedTauTable) {
  (void)err;
  const auto s = a15::build_canonical_structure();
  const auto check = a15::verify_tau_tables(s, printed);
  detail::Sink sink(c.output_path, out);
  auto& os = sink.stream();
  os << "cells_checked " << check.cells_checked << '\n';
  os << "label_mismatches " << check.label_mismatches.size() << '\n';
  for (int p : check.label_mismatches) os << "label " << p << '\n';
  os << "diffs " << check.diffs.size() << '\n';
  for (const auto& d : check.diffs)
    os << "tau" << d.generator << '(' << d.point << "): printed " << d.printed << ", derived " << d.derived << '\n';
  return check.diffs.empty() && check.label_mismatches.empty() ? 0 : 1;
}

inline int cmd_six_sets(const RunConfig& c, std::ostream& out, std::ostream& err) {
  (void)err;
  const auto s = a15::build_canonical_structure();
  const auto sets = a15::generate_six_sets(s, c.anchor);
  detail::Sink sink(c.output_path, out);
  sink.stream() << "anchor " << c.anchor << " count " << sets.size() << '\n';
  for (const auto& set : sets) {
    const auto pts = set.points();
    for (std::size_t i = 0; i < pts.size(); ++i) sink.stream() << (i ? " " : "") << pts[i];
    sink.stream() << '\n';
  }
  return 0;
}

inline int cmd_orbits(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto ctx = a15::SearchContext::build();
  const auto st = a15::compute_orbits(ctx);
  detail::Sink sink(c.output_path, out);
  sink.stream() << "index,orbit_size,representative\n";
  for (std::size_t i = 0; i < st.partition.orbits.size(); ++i)
    sink.stream() << i << ',' << st.partition.orbits[i].members.size() << ','
                  << a15::bundle_text(st.partition.orbits[i].representative) << '\n';
  err << "six_sets " << st.six_sets.size() << " k6 " << st.bundles.size() << " stabilizer " << st.stabilizer.size()
      << " orbits " << st.partition.orbits.size() << '\n';
  return st.partition.orbits.size() == a15::kExpectedOrbits ? 0 : 1;
}

inline int cmd_search_a15(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const a15::StagePlan plan{c.anchor_order, c.strict_b_consistency};
  a15::PipelineResult result;
  try {
    const auto ctx = a15::SearchContext::build();
    result = a15::run_pipeline(ctx, plan, {c.workers, c.checkpoint_path});
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return 2;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  {
    detail::Sink sink(c.output_path, out);
    sink.stream() << a15::search_report(result, ms).dump(2) << '\n';
  }
  if (c.trace_path) {
    detail::Sink trace(c.trace_path, out);
    a15::write_trace_csv(trace.stream(), result);
  }
  if (result.outcome.resumed) err << "resumed " << result.outcome.resumed << " representatives from checkpoint\n";
  if (!a15::milestones_hold(result)) {
    err << "search milestones not met\n";
    return 1;
  }
  return 0;
}

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::VerifyPlane: return cmd_verify_plane(c, out, err);
    case Command::EnumerateCode: return cmd_enumerate_code(c, out, err);
    case Command::WeightTable: return cmd_weight_table(c, out, err);
    case Command::MacWilliams: return cmd_macwilliams(c, out, err);
    case Command::VerifyTables: return cmd_verify_tables(c, out, err);
    case Command::SearchA15: return cmd_search_a15(c, out, err);
    case Command::SixSets: return cmd_six_sets(c, out, err);
    case Command::Orbits: return cmd_orbits(c, out, err);
  }
  return 2;
}

/// Builds the CLI11 parser bound to `c`; selected subcommand is resolved by `command_of`.
inline void configure_parser(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output_path, "Write the result here"); };
  auto add_plane = [&](CLI::App* sub) {
    sub->add_option("--order", c.order, "Prime order of the constructed plane (2 = cyclic Fano plane)");
    sub->add_option("--input", c.input_path, "Read the plane from a text file");
  };

  auto* vp = app.add_subcommand("verify-plane", "Check the projective plane axioms");
  add_plane(vp);
  add_output(vp);
  auto* ec = app.add_subcommand("enumerate-code", "List every codeword of a small plane's binary code");
  add_plane(ec);
  add_output(ec);
  auto* wt = app.add_subcommand("weight-table", "Solve the order-10 weight distribution");
  add_output(wt);
  wt->add_flag("--paired", c.paired, "Emit i,N-i,A_i rows for the nonzero half");
  auto* mw = app.add_subcommand("macwilliams", "Transform a weight distribution to its dual's");
  mw->add_option("--coefficients", c.coefficients, "A_0,...,A_N")->required();
  mw->add_option("--size", c.code_size, "Code size (defaults to the coefficient sum)");
  add_output(mw);
  auto* vt = app.add_subcommand("verify-tables", "Diff the derived tau actions against the printed tables");
  add_output(vt);
  auto* sa = app.add_subcommand("search-a15", "Run the weight-15 extension search");
  add_output(sa);
  sa->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  sa->add_option("--checkpoint", c.checkpoint_path, "Append-only checkpoint file (resumed if present)");
  sa->add_option("--trace", c.trace_path, "Per-orbit CSV trace");
  sa->add_flag("--strict-b-consistency", c.strict_b_consistency, "Also require consistent B-point meets");
  sa->add_option("--anchor-order", c.anchor_order, "Anchors, starting with 1")->delimiter(',');
  auto* ss = app.add_subcommand("six-sets", "List the 6-sets through an A-point");
  ss->add_option("--anchor", c.anchor, "A-point 1..15")->check(CLI::Range(1, 15));
  add_output(ss);
  auto* ob = app.add_subcommand("orbits", "Orbit representatives of the K6 bundles through point 1");
  add_output(ob);
}

inline Command command_of(const CLI::App& app) {
  static const std::vector<std::pair<std::string, Command>> names = {
      {"verify-plane", Command::VerifyPlane}, {"enumerate-code", Command::EnumerateCode},
      {"weight-table", Command::WeightTable}, {"macwilliams", Command::MacWilliams},
      {"verify-tables", Command::VerifyTables}, {"search-a15", Command::SearchA15},
      {"six-sets", Command::SixSets},          {"orbits", Command::Orbits},
  };
  for (const auto& [name, cmd] : names)
    if (app.got_subcommand(name)) return cmd;
  throw std::invalid_argument("no subcommand selected");
}

}  // namespace pg10::cli
