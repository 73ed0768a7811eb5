#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercount/counting.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/hypergraph.hpp"
#include "hypercount/properties.hpp"

namespace hypercount {

enum class AssertionKind { extension, thm14_band, cor33, cor34, lemma21, lemma25 };

std::string to_string(AssertionKind kind);
/// Accepts "extension", "thm14-band", "cor33", "cor34", "lemma21", "lemma25"
/// (underscores work too).
AssertionKind parse_assertion(std::string_view name);

struct Experiment {
  std::string name;
  std::string pattern;  // catalog name, or path to a hypergraph file
  GenSpec host;         // kind, k and kind-specific fields; n/p/seed are swept
  std::vector<std::size_t> ns;
  std::vector<double> ps;          // fixed densities; ignored when p_scale is set
  std::optional<double> p_scale;   // p = p_scale · n^(-p_exponent)
  double p_exponent = 0.0;
  std::vector<std::uint64_t> seeds;

  double C = 2.0;
  double delta = 0.1;        // δ for pseudorandomness, pollution and TUPLE conclusions
  double delta_prime = 0.1;  // weaker-hypothesis δ' for lemma21 / lemma25
  std::size_t d = 3;         // TUPLE depth concluded by lemma21
  double epsilon = 0.15;     // thm14-band width
  ScanSettings scan;         // used for every property check
  std::uint64_t node_budget = 1'000'000'000;
  std::vector<AssertionKind> assertions;

  std::string json_out = "records.json";
  std::string csv_out = "records.csv";
  std::string timing_out = "timing.csv";
};

/// Reads an experiment from config text; relative pattern paths are resolved
/// against base_dir. Throws Error(config).
Experiment parse_experiment(std::string_view text, const std::string& base_dir = ".");
Experiment load_experiment(const std::string& path);

enum class Outcome { pass, fail, skip };
std::string to_string(Outcome outcome);
Outcome parse_outcome(std::string_view text);

struct AssertionResult {
  std::string name;
  Outcome outcome = Outcome::skip;
  std::string detail;
};

/// Compact account of one property check made during a run.
struct VerdictSummary {
  std::string label;  // what the check was for, e.g. "pseudorandom"
  bool holds = false;
  std::string mode;   // "exact" or "sampled"
  std::uint64_t checked = 0;
  double bad_fraction = 0.0;
};

struct RunRecord {
  std::string experiment;
  std::string pattern;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p_target = 0.0;
  double p = 0.0;  // realized density
  std::uint64_t edges = 0;
  std::optional<CountReport> count;
  std::string count_note;  // why count is missing, if it is
  std::vector<VerdictSummary> verdicts;
  std::vector<AssertionResult> assertions;
  double wall_seconds = 0.0;  // never serialized into the record files
};

/// One record per (n, p, seed), sorted by (n, seed, p_target). Runs execute
/// concurrently on `workers` threads; the records do not depend on it.
std::vector<RunRecord> run_experiment(const Experiment& exp, std::size_t workers = 0);

bool any_failed(const std::vector<RunRecord>& records);

/// Evaluates every assertion of `exp` on one host; exposed for testing.
RunRecord run_single(const Experiment& exp, const Hypergraph& pattern, std::size_t n, double p_target,
                     std::uint64_t seed);

/// Writes json_out, csv_out and timing_out into `dir` (created if missing).
void write_reports(const Experiment& exp, const std::vector<RunRecord>& records, const std::string& dir);

}  // namespace hypercount
