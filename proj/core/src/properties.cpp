#include "hypercount/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exact_threshold.hpp"
#include "family_scan.hpp"
#include "hypercount/error.hpp"

namespace hypercount {

namespace {

// p^r, exact-ratio form when p comes from the edge count.
struct DensityPower {
  bool from_graph = true;
  Density density;
  double p = 0.0;

  long double pow(unsigned r) const {
    if (from_graph) return ratio_power(density.edges, density.total, r);
    return std::pow(static_cast<long double>(p), static_cast<long double>(r));
  }

  /// base·p^r, exact when p comes from the edge count.
  detail::Threshold threshold(std::optional<std::uint64_t> base, long double base_value, unsigned r) const {
    if (from_graph && base) return detail::Threshold::rational(*base, density.edges, density.total, r);
    return detail::Threshold::approximate(base_value * pow(r));
  }
};

// n^e, or nothing on overflow.
std::optional<std::uint64_t> int_power(std::uint64_t n, std::size_t e) {
  std::uint64_t acc = 1;
  for (std::size_t j = 0; j < e; ++j) {
    if (n != 0 && acc > UINT64_MAX / n) return std::nullopt;
    acc *= n;
  }
  return acc;
}

DensityPower resolve_density(const Hypergraph& g, const std::optional<double>& override_p) {
  DensityPower out;
  out.density = density(g);
  if (override_p) {
    if (!(*override_p >= 0.0 && *override_p <= 1.0)) throw Error(ErrorKind::invalid_argument, "p must lie in [0, 1]");
    out.from_graph = false;
    out.p = *override_p;
  } else {
    out.p = out.density.value;
  }
  return out;
}

std::size_t resolve_i(const Hypergraph& g, const std::optional<std::size_t>& i) {
  const std::size_t k = g.uniformity();
  const std::size_t value = i.value_or(k - 1);
  if (value < 1 || value > k - 1) {
    throw Error(ErrorKind::invalid_argument, "i must satisfy 1 <= i <= k-1");
  }
  return value;
}

void check_scan(const ScanSettings& scan) {
  if (scan.mode == CheckMode::sampled && scan.samples == 0) {
    throw Error(ErrorKind::invalid_argument, "sampled mode needs at least one sample");
  }
}

SubsetFamily to_family(std::span<const std::uint32_t> members, std::size_t i) {
  std::vector<VertexSet> sets;
  sets.reserve(members.size());
  for (auto m : members) sets.push_back(colex_unrank(m, i));
  return SubsetFamily(std::move(sets));
}

detail::ScanTally run_scan(const detail::SetIndex& index, std::size_t r, const detail::ScanRule& rule,
                           const ScanSettings& scan, std::uint64_t families) {
  if (scan.mode == CheckMode::exact) {
    if (families > scan.exact_limit) {
      throw Error(ErrorKind::infeasible, "exact scan of " + std::to_string(families) + " families for r=" +
                                             std::to_string(r) + " exceeds the exact limit " +
                                             std::to_string(scan.exact_limit) + "; use sampled mode");
    }
    return detail::scan_exact(index, r, rule, scan.workers);
  }
  return detail::scan_sampled(index, r, rule, scan.samples, scan.seed, scan.workers);
}

LevelStats level_from(const detail::ScanTally& tally, std::size_t r, std::uint64_t families, double threshold) {
  LevelStats s;
  s.r = r;
  s.families = families;
  s.checked = tally.checked;
  s.bad = tally.bad;
  s.bad_fraction = tally.checked ? static_cast<double>(tally.bad) / static_cast<double>(tally.checked) : 0.0;
  s.threshold = threshold;
  s.min_count = tally.checked ? tally.min_count : 0;
  s.max_count = tally.max_count;
  s.mean_count =
      tally.checked ? static_cast<double>(tally.count_sum) / static_cast<double>(tally.checked) : 0.0;
  return s;
}

void start_verdict(Verdict& v, const char* name, const ScanSettings& scan, std::size_t i, double p) {
  v.property = name;
  v.mode = scan.mode;
  v.i = i;
  v.p = p;
  if (scan.mode == CheckMode::sampled) {
    v.seed = scan.seed;
    v.samples = scan.samples;
  }
}

void add_witnesses(Verdict& v, const detail::ScanTally& tally, std::size_t i, std::size_t cap) {
  for (const auto& hit : tally.hits) {
    if (v.witnesses.size() >= cap) break;
    v.witnesses.push_back({to_family(hit.members, i), hit.count});
  }
}

bool union_is_stable(const Hypergraph& g, std::span<const std::uint32_t> members, std::size_t i) {
  VertexSet all;
  for (auto m : members) {
    const auto s = colex_unrank(m, i);
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return is_stable(g, all);
}

}  // namespace

Verdict check_bdd(const Hypergraph& g, const BddParams& params) {
  if (params.d < 1) throw Error(ErrorKind::invalid_argument, "d must be at least 1");
  if (!(params.C > 0.0)) throw Error(ErrorKind::invalid_argument, "C must be positive");
  check_scan(params.scan);
  const std::size_t i = resolve_i(g, params.i);
  const DensityPower dp = resolve_density(g, params.p);
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.uniformity();

  Verdict v;
  start_verdict(v, "bdd", params.scan, i, dp.p);
  const detail::SetIndex index(g, i);
  const auto scale = int_power(n, k - i);
  const long double scale_value = std::pow(static_cast<long double>(n), static_cast<long double>(k - i));
  const double C = params.C;
  std::uint64_t bad = 0;
  for (std::size_t r = 1; r <= params.d; ++r) {
    const std::uint64_t families = binomial_saturating(index.size(), r);
    const auto limit = dp.threshold(scale, scale_value, static_cast<unsigned>(r));
    const long double bound = C * limit.value();
    detail::ScanRule rule;
    rule.hit_cap = params.scan.witness_cap;
    rule.is_bad = [limit, C](std::uint64_t c) { return limit.exceeded_by(c, C); };
    const auto tally = run_scan(index, r, rule, params.scan, families);
    LevelStats s = level_from(tally, r, families, static_cast<double>(bound));
    s.holds = tally.bad == 0;
    if (params.scan.mode == CheckMode::sampled) {
      const auto [lo, hi] = wilson_interval(tally.bad, tally.checked);
      s.ci_low = lo;
      s.ci_high = hi;
    }
    v.holds = v.holds && s.holds;
    v.checked += tally.checked;
    bad += tally.bad;
    add_witnesses(v, tally, i, params.scan.witness_cap);
    v.levels.push_back(s);
  }
  v.bad_fraction = v.checked ? static_cast<double>(bad) / static_cast<double>(v.checked) : 0.0;
  if (dp.p == 0.0) v.notes.push_back("p = 0: every bound is 0 and BDD holds only for the empty hypergraph");
  if (params.scan.mode == CheckMode::sampled) {
    v.notes.push_back("sampled: holds means no violation was found among the sampled families");
  }
  return v;
}

Verdict check_tuple(const Hypergraph& g, const TupleParams& params) {
  if (params.d < 1) throw Error(ErrorKind::invalid_argument, "d must be at least 1");
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "delta must lie in (0, 1)");
  }
  check_scan(params.scan);
  const std::size_t i = resolve_i(g, params.i);
  const DensityPower dp = resolve_density(g, params.p);
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.uniformity();
  const std::uint64_t base = binomial(n, k - i);
  const double delta = params.delta;

  Verdict v;
  start_verdict(v, "tuple", params.scan, i, dp.p);
  const detail::SetIndex index(g, i);
  for (std::size_t r = 1; r <= params.d; ++r) {
    const std::uint64_t families = binomial_saturating(index.size(), r);
    const auto band = dp.threshold(base, static_cast<long double>(base), static_cast<unsigned>(r));
    const long double target = band.value();
    detail::ScanRule rule;
    rule.hit_cap = params.scan.witness_cap;
    rule.is_bad = [band, delta](std::uint64_t c) { return !band.within(c, delta); };
    const auto tally = run_scan(index, r, rule, params.scan, families);
    LevelStats s = level_from(tally, r, families, static_cast<double>(target));
    if (target > 0) {
      const long double hi = std::fabs(static_cast<long double>(s.max_count) - target);
      const long double lo = std::fabs(target - static_cast<long double>(s.min_count));
      s.max_relative_deviation = tally.checked ? static_cast<double>(std::max(hi, lo) / target) : 0.0;
    }
    if (params.scan.mode == CheckMode::exact) {
      s.holds = static_cast<long double>(tally.bad) <= delta * static_cast<long double>(families);
    } else {
      s.holds = s.bad_fraction <= delta;
      const auto [lo, hi] = wilson_interval(tally.bad, tally.checked);
      s.ci_low = lo;
      s.ci_high = hi;
    }
    v.holds = v.holds && s.holds;
    v.checked += tally.checked;
    v.bad_fraction = std::max(v.bad_fraction, s.bad_fraction);
    add_witnesses(v, tally, i, params.scan.witness_cap);
    v.levels.push_back(s);
  }
  if (dp.p == 0.0) v.notes.push_back("p = 0: the deviation band is empty, every family is bad");
  return v;
}

PseudoVerdict check_pseudorandom(const Hypergraph& g, const PseudoParams& params) {
  PseudoVerdict out;
  out.density = density(g);
  BddParams bp;
  bp.d = params.d1;
  bp.C = params.C;
  bp.scan = params.scan;
  TupleParams tp;
  tp.d = params.d2;
  tp.delta = params.delta;
  tp.scan = params.scan;
  out.bdd = check_bdd(g, bp);
  out.tuple = check_tuple(g, tp);
  out.holds = out.bdd.holds && out.tuple.holds;
  return out;
}

std::vector<SubsetFamily> bad_families(const Hypergraph& g, double delta, std::size_t r, bool stable_only,
                                       ScanSettings scan) {
  if (r < 1) throw Error(ErrorKind::invalid_argument, "r must be at least 1");
  if (!(delta > 0.0)) throw Error(ErrorKind::invalid_argument, "delta must be positive");
  check_scan(scan);
  const std::size_t i = g.uniformity() - 1;
  const DensityPower dp = resolve_density(g, std::nullopt);
  const std::uint64_t n = g.vertex_count();
  const auto band = dp.threshold(n, static_cast<long double>(n), static_cast<unsigned>(r));

  const detail::SetIndex index(g, i);
  detail::ScanRule rule;
  rule.hit_cap = std::numeric_limits<std::size_t>::max();
  rule.is_bad = [band, delta](std::uint64_t c) { return !band.within(c, delta); };
  if (stable_only) {
    rule.accept = [&g, i](std::span<const std::uint32_t> members) { return union_is_stable(g, members, i); };
  }
  auto tally = run_scan(index, r, rule, scan, binomial_saturating(index.size(), r));
  if (scan.mode == CheckMode::sampled) {
    std::sort(tally.hits.begin(), tally.hits.end(),
              [](const auto& a, const auto& b) { return a.members < b.members; });
    tally.hits.erase(std::unique(tally.hits.begin(), tally.hits.end(),
                                 [](const auto& a, const auto& b) { return a.members == b.members; }),
                     tally.hits.end());
  }
  std::vector<SubsetFamily> out;
  out.reserve(tally.hits.size());
  for (const auto& hit : tally.hits) out.push_back(to_family(hit.members, i));
  return out;
}

bool is_bad_family(const Hypergraph& g, const SubsetFamily& family, double delta, bool stable_only) {
  const std::size_t k = g.uniformity();
  if (family.set_size() != k - 1) throw Error(ErrorKind::invalid_argument, "bad families consist of (k-1)-sets");
  if (stable_only) {
    VertexSet all;
    for (const auto& s : family.sets()) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (!is_stable(g, all)) return false;
  }
  const DensityPower dp = resolve_density(g, std::nullopt);
  const std::uint64_t n = g.vertex_count();
  const auto band = dp.threshold(n, static_cast<long double>(n), static_cast<unsigned>(family.size()));
  return !band.within(joint_neighborhood(g, family).size(), delta);
}

ConcentrationResult concentration_check(std::span<const double> values, double target, double gamma,
                                        double delta) {
  if (values.empty()) throw Error(ErrorKind::invalid_argument, "concentration check needs values");
  if (!(target > 0.0)) throw Error(ErrorKind::domain, "target must be positive");
  long double sum = 0, squares = 0;
  std::size_t within = 0;
  for (double a : values) {
    if (a < 0.0) throw Error(ErrorKind::domain, "values must be non-negative");
    sum += a;
    squares += static_cast<long double>(a) * a;
    if (std::fabs(a - target) < delta * target) ++within;
  }
  const long double n = static_cast<long double>(values.size());
  ConcentrationResult out;
  out.within_band = within;
  out.premises_hold = sum >= (1.0L - gamma) * n * target &&
                      squares <= (1.0L + gamma) * n * static_cast<long double>(target) * target;
  out.conclusion_holds = static_cast<long double>(within) > (1.0L - delta) * n;
  return out;
}

double binomial_ratio_gap(std::uint64_t n, double a, unsigned r) {
  if (r < 1 || n < r) throw Error(ErrorKind::domain, "binomial ratio gap needs n >= r >= 1");
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorKind::domain, "binomial ratio gap needs 0 < a <= 1");
  long double x = static_cast<long double>(n) * a;
  if (x < r) x = std::floor(x);
  // C(x, r) / (a^r C(n, r)) as a product of per-factor ratios.
  long double ratio = 1.0L;
  for (unsigned j = 0; j < r; ++j) {
    ratio *= (x - j) / (static_cast<long double>(a) * static_cast<long double>(n - j));
  }
  return static_cast<double>(std::fabs(ratio - 1.0L));
}

std::pair<double, double> wilson_interval(std::uint64_t bad, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 2.5758293035489004;  // two-sided 99%
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(bad) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

}  // namespace hypercount
