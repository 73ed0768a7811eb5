#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercount/hypergraph.hpp"

namespace hypercount {

enum class CheckMode { exact, sampled };

/// How a property checker walks the family space. Exact mode refuses to run
/// when C(C(n,i), r) exceeds exact_limit for some r; it never falls back to
/// sampling on its own.
struct ScanSettings {
  CheckMode mode = CheckMode::exact;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  std::uint64_t exact_limit = 2'000'000;
  std::size_t witness_cap = 16;
  std::size_t workers = 0;  // 0: HYPERCOUNT_THREADS or hardware concurrency
};

/// BDD_i(d, C, p): every family of r <= d distinct i-sets has joint
/// neighborhood of size at most C n^{k-i} p^r.
struct BddParams {
  std::size_t d = 2;
  double C = 2.0;
  std::optional<std::size_t> i;  // default k-1
  std::optional<double> p;       // default density(G)
  ScanSettings scan;
};

/// TUPLE_i(d, δ, p): for each r <= d, all but a δ fraction of families have
/// joint neighborhood strictly within δ·C(n,k-i)p^r of C(n,k-i)p^r.
struct TupleParams {
  std::size_t d = 2;
  double delta = 0.1;
  std::optional<std::size_t> i;
  std::optional<double> p;
  ScanSettings scan;
};

/// (d1, C, d2, δ, p)-pseudorandomness with p = density(G) and i = k-1.
struct PseudoParams {
  std::size_t d1 = 2;
  double C = 2.0;
  std::size_t d2 = 2;
  double delta = 0.1;
  ScanSettings scan;
};

struct Witness {
  SubsetFamily family;
  std::uint64_t count = 0;  // joint neighborhood size
};

/// Per family size r.
struct LevelStats {
  std::size_t r = 0;
  std::uint64_t families = 0;  // C(C(n,i), r), saturated at 2^64-1
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  double bad_fraction = 0.0;
  double threshold = 0.0;  // BDD bound or TUPLE target
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  double mean_count = 0.0;
  double max_relative_deviation = 0.0;  // TUPLE only
  std::optional<double> ci_low;  // sampled mode, Wilson 99%
  std::optional<double> ci_high;
  bool holds = true;
};

struct Verdict {
  std::string property;  // "bdd" or "tuple"
  CheckMode mode = CheckMode::exact;
  bool holds = true;
  std::vector<Witness> witnesses;
  std::uint64_t checked = 0;
  double bad_fraction = 0.0;
  std::size_t i = 0;
  double p = 0.0;
  std::vector<LevelStats> levels;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

struct PseudoVerdict {
  bool holds = false;
  Density density;
  Verdict bdd;
  Verdict tuple;
};

Verdict check_bdd(const Hypergraph& g, const BddParams& params);
Verdict check_tuple(const Hypergraph& g, const TupleParams& params);
PseudoVerdict check_pseudorandom(const Hypergraph& g, const PseudoParams& params);

/// B_G(δ, r): families of r distinct (k-1)-sets whose joint neighborhood
/// deviates from np^r by at least δnp^r. With stable_only, only families
/// whose union spans no edge of G (B_G^stb). In sampled mode the result holds
/// the distinct bad families met in the sample.
std::vector<SubsetFamily> bad_families(const Hypergraph& g, double delta, std::size_t r, bool stable_only,
                                       ScanSettings scan = {});

/// Membership test for a single family in B_G(δ, r) or B_G^stb(δ, r).
bool is_bad_family(const Hypergraph& g, const SubsetFamily& family, double delta, bool stable_only);

struct ConcentrationResult {
  bool premises_hold = false;
  bool conclusion_holds = false;
  std::size_t within_band = 0;
};

/// Evaluates both sides of the averaging fact: premises are
/// Σa_i >= (1-γ)N·a and Σa_i² <= (1+γ)N·a²; the conclusion is that more than
/// (1-δ)N entries satisfy |a_i - a| < δa.
ConcentrationResult concentration_check(std::span<const double> values, double target, double gamma,
                                        double delta);

/// |C(na, r) - a^r C(n, r)| / (a^r C(n, r)) with the real-argument binomial
/// for C(na, r); when na < r the integer floor is used instead.
double binomial_ratio_gap(std::uint64_t n, double a, unsigned r);

/// Wilson score interval for `bad` successes out of `trials` at 99%.
std::pair<double, double> wilson_interval(std::uint64_t bad, std::uint64_t trials);

}  // namespace hypercount
