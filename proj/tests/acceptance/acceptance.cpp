// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hypercount/combinatorics.hpp"
#include "hypercount/counting.hpp"
#include "hypercount/error.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/properties.hpp"
#include "hypercount/rng.hpp"
#include "hypercount/structure.hpp"
#include "oracles.hpp"

using namespace hypercount;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Hypergraph binomial_host(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.k = k;
  spec.p = p;
  spec.seed = seed;
  return generate(spec);
}

// Sequences of distinct values below n of exactly `len` entries.
std::vector<std::vector<Vertex>> tuples(std::size_t n, std::size_t len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

std::size_t max_degree_of(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v) best = std::max(best, h.degree(v));
  return best;
}

// D_H recomputed from the exhaustive degeneracy oracle.
std::size_t oracle_cap(const Hypergraph& h) {
  return std::min(h.uniformity() * oracle::degeneracy(h), max_degree_of(h));
}

struct Pair {
  Hypergraph h;
  Hypergraph g;
};

// Linear patterns on at most 5 vertices paired with dense hosts on at most 7.
std::vector<Pair> small_linear_corpus() {
  std::vector<Hypergraph> patterns;
  for (const auto& entry : pattern_catalog())
    if (entry.pattern.vertex_count() <= 5) patterns.push_back(entry.pattern);
  oracle::Rng rng(20240601);
  while (patterns.size() < 24) {
    const std::size_t k = 2 + patterns.size() % 2;
    const std::size_t m = k + 1 + rng() % (6 - k);
    auto h = oracle::random_linear(m, k, 5, rng);
    if (h.edge_count() > 0) patterns.push_back(std::move(h));
  }
  std::vector<Pair> out;
  for (const auto& h : patterns) {
    for (int j = 0; j < 6; ++j) {
      const std::size_t n = 6 + j % 2;
      const double p = 0.5 + 0.1 * (j % 4);
      out.push_back({h, oracle::random_hypergraph(n, h.uniformity(), p, rng)});
    }
  }
  return out;
}

bool host_is_bdd(const Hypergraph& h, const Hypergraph& g, double C) {
  if (g.edge_count() == 0) return false;
  BddParams params;
  params.d = std::max<std::size_t>(1, profile(h).cap);
  params.C = C;
  return check_bdd(g, params).holds;
}

Outcome ac1_oracle_equivalence() {
  const auto start = Clock::now();
  oracle::Rng rng(1);
  std::size_t pairs = 0, mismatches = 0;
  for (int t = 0; t < 240; ++t) {
    const std::size_t k = 2 + t % 2;
    const std::size_t m = 2 + t % 4;
    const std::size_t n = std::max<std::size_t>(m, 3 + t % 5);
    const auto h = t % 3 == 0 ? oracle::random_linear(m, k, 4, rng) : oracle::random_hypergraph(m, k, 0.5, rng);
    const auto g = oracle::random_hypergraph(n, k, 0.3 + 0.1 * (t % 6), rng);
    ++pairs;
    if (count_embeddings(h, g).total != oracle::count_injections(h, g).total) ++mismatches;
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && pairs >= 200 && secs < 60.0,
          fmt::format("{} pairs, {} mismatches, {:.1f}s", pairs, mismatches, secs)};
}

Outcome ac2_extension_lemma() {
  std::size_t verified = 0, checks = 0, violations = 0, pairs = 0;
  for (const auto& [h, g] : small_linear_corpus()) {
    ++pairs;
    const double C = 2.0;
    if (!host_is_bdd(h, g, C)) continue;
    ExtensionBoundChecker checker(h, g, C);
    ++verified;
    for (std::size_t len = 0; len <= checker.max_prefix() && len <= h.vertex_count(); ++len) {
      const auto ws = tuples(h.vertex_count(), len);
      const auto xs = tuples(g.vertex_count(), len);
      for (const auto& w : ws)
        for (const auto& x : xs) {
          ++checks;
          if (!checker.check(PinSpec{w, x}).holds) ++violations;
        }
    }
  }

  // Binomial hosts: loose path into k = 3, n = 25, p = 0.4.
  const auto& path = catalog_pattern("k3-loose-path2").pattern;
  const auto sweep = [&](double C) {
    std::size_t ok = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto g = binomial_host(25, 3, 0.4, seed);
      std::optional<ExtensionBoundChecker> checker;
      try {
        checker.emplace(path, g, C);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::precondition) throw;
        continue;
      }
      ++ok;
      CounterRng rng(seed, 7);
      for (std::size_t len = 0; len <= checker->max_prefix(); ++len) {
        for (int t = 0; t < (len == 0 ? 1 : 4); ++t) {
          PinSpec pins;
          while (pins.pattern.size() < len) {
            const auto w = static_cast<Vertex>(rng.below(path.vertex_count()));
            const auto x = static_cast<Vertex>(rng.below(25));
            if (std::find(pins.pattern.begin(), pins.pattern.end(), w) != pins.pattern.end()) continue;
            if (std::find(pins.host.begin(), pins.host.end(), x) != pins.host.end()) continue;
            pins.pattern.push_back(w);
            pins.host.push_back(x);
          }
          ++checks;
          if (!checker->check(pins).holds) ++violations;
        }
      }
    }
    return ok;
  };
  const std::size_t at2 = sweep(2.0);
  const std::size_t at3 = sweep(3.0);
  return {violations == 0 && verified > 0 && at3 > 0,
          fmt::format("{} violations in {} checks; corpus BDD verified {}/{}; binomial BDD verified {}/100 at C=2, "
                      "{}/100 at C=3",
                      violations, checks, verified, pairs, at2, at3)};
}

Outcome ac3_prefix_orderings() {
  std::vector<Hypergraph> patterns;
  for (const auto& entry : pattern_catalog())
    if (entry.pattern.vertex_count() <= 8) patterns.push_back(entry.pattern);
  oracle::Rng rng(3);
  std::size_t random = 0;
  while (random < 100) {
    const std::size_t k = 2 + random % 3;
    const std::size_t m = std::min<std::size_t>(8, k + 1 + rng() % 6);
    patterns.push_back(oracle::random_linear(m, k, 3 + rng() % 10, rng));
    ++random;
  }
  std::size_t prefixes = 0, bad = 0;
  for (const auto& h : patterns) {
    const std::size_t m = h.vertex_count();
    const std::size_t cap = oracle_cap(h);
    const std::size_t limit = std::min(m, std::max(h.uniformity(), oracle::degeneracy(h)));
    for (std::size_t len = 0; len <= limit; ++len)
      for (const auto& w : tuples(m, len)) {
        ++prefixes;
        const auto seq = prefix_degenerate_ordering(h, w).ordering.sequence;
        const auto degrees = oracle::left_degrees(h, seq);
        const bool starts = seq.size() == m && std::equal(w.begin(), w.end(), seq.begin());
        const bool bounded = std::all_of(degrees.begin(), degrees.end(), [&](std::size_t d) { return d <= cap; });
        if (!starts || !bounded) ++bad;
      }
  }
  return {bad == 0, fmt::format("{} patterns, {} prefixes, {} bad orderings", patterns.size(), prefixes, bad)};
}

Outcome ac4_degeneracy() {
  std::vector<Hypergraph> patterns;
  for (const auto& entry : pattern_catalog()) patterns.push_back(entry.pattern);
  oracle::Rng rng(4);
  for (int t = 0; t < 400; ++t) {
    const std::size_t k = 2 + t % 3;
    const std::size_t m = k + static_cast<std::size_t>(t % (9 - k));
    patterns.push_back(t % 2 ? oracle::random_hypergraph(m, k, 0.2 + 0.1 * (t % 5), rng)
                             : oracle::random_linear(m, k, 12, rng));
  }
  std::size_t bad = 0;
  for (const auto& h : patterns)
    if (degeneracy(h).value != oracle::degeneracy(h)) ++bad;
  return {bad == 0, fmt::format("{} patterns with m <= 8, {} disagreements", patterns.size(), bad)};
}

Outcome ac5_bdd_lower_levels() {
  oracle::Rng rng(5);
  std::size_t premises = 0, counterexamples = 0;
  const int instances = 500;
  for (int t = 0; t < instances; ++t) {
    const std::size_t n = 5 + t % 5;
    const double p = 0.2 + 0.1 * (t % 7);
    const auto g = oracle::random_hypergraph(n, 3, p, rng);
    if (g.edge_count() == 0) continue;
    for (double C : {1.25, 1.5, 2.0, 3.0}) {
      BddParams top;
      top.d = 2;
      top.C = C;
      if (!check_bdd(g, top).holds) continue;
      ++premises;
      BddParams low = top;
      low.i = 1;
      if (!check_bdd(g, low).holds) ++counterexamples;
    }
  }
  return {counterexamples == 0 && premises > 0,
          fmt::format("{} instances, {} (G, C) pairs with BDD at i=2, {} counterexamples at i=1", instances,
                      premises, counterexamples)};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

Outcome ac6_theorem_band() {
  const auto start = Clock::now();
  const auto& path = catalog_pattern("k3-loose-path2").pattern;
  std::vector<double> medians;
  std::string trail;
  for (std::size_t n : {40u, 60u, 80u, 100u}) {
    const double p = 2.0 * std::pow(static_cast<double>(n), -0.45);
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto report = count_embeddings(path, binomial_host(n, 3, p, seed));
      errors.push_back(report.relative_error.value_or(1.0));
    }
    medians.push_back(median(errors));
    trail += fmt::format("{}n={}:{:.4f}", trail.empty() ? "" : " ", n, medians.back());
  }
  bool monotone = true;
  for (std::size_t j = 1; j < medians.size(); ++j) monotone = monotone && medians[j] <= medians[j - 1];
  const bool tight = medians.back() < 0.25;
  return {monotone && tight,
          fmt::format("median relative error {} ({}; {:.0f}s)", trail,
                      monotone ? "non-increasing" : "NOT non-increasing", seconds_since(start))};
}

Outcome ac7_non_induced() {
  std::size_t verified = 0, violations = 0, pairs = 0;
  CountOptions options;
  options.induced_split = true;
  for (const auto& [h, g] : small_linear_corpus()) {
    ++pairs;
    const double C = 2.0;
    if (h.vertex_count() < h.uniformity() || !host_is_bdd(h, g, C)) continue;
    ++verified;
    const auto report = count_embeddings(h, g, {}, options);
    const double bound = non_induced_bound(h.uniformity(), h.vertex_count(), C, g.vertex_count(),
                                           density(g).value, h.edge_count());
    if (static_cast<double>(*report.non_induced) > bound) ++violations;
  }
  return {violations == 0 && verified > 0,
          fmt::format("{} of {} pairs satisfy BDD(D_H, C); {} violations", verified, pairs, violations)};
}

Outcome ac8_polluted() {
  struct Setup {
    const char* pattern;
    std::size_t n;
    double p;
    double C;
  };
  const Setup setups[] = {{"k3-loose-path2", 12, 0.5, 3.0}, {"k3-loose-cycle3", 12, 0.5, 3.0},
                          {"k2-path4", 20, 0.5, 4.0},       {"k2-cycle4", 20, 0.5, 4.0},
                          {"k2-cycle5", 20, 0.5, 4.0},      {"k2-matching2", 20, 0.5, 4.0}};
  const double delta = 0.5;
  std::size_t instances = 0, planted = 0, frontiers = 0, violations = 0, nonzero = 0;
  for (const auto& s : setups) {
    const auto& entry = catalog_pattern(s.pattern);
    const auto& h = entry.pattern;
    const auto& order = degeneracy(h).ordering.sequence;
    for (int variant = 0; variant < 2; ++variant)
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GenSpec spec;
        spec.kind = variant ? GenKind::planted_bad : GenKind::binomial;
        spec.n = s.n;
        spec.k = h.uniformity();
        spec.p = s.p;
        spec.seed = seed;
        spec.boost = 1.6;
        const auto g = generate(spec);
        PseudoParams params;
        params.d1 = entry.profile.cap;
        params.C = s.C;
        params.d2 = entry.profile.degeneracy;
        params.delta = delta;
        if (!check_pseudorandom(g, params).holds) continue;
        ++instances;
        planted += variant;
        const double p = density(g).value;
        for (std::size_t front = 2; front <= h.vertex_count(); ++front) {
          const auto counts = count_clean_polluted(h, order, front, g, delta);
          const double bound =
              pollution_bound(delta, counts.r, h.uniformity(), s.C, front, s.n, p, counts.edges);
          ++frontiers;
          if (counts.polluted > 0) ++nonzero;
          if (static_cast<double>(counts.polluted) > bound) ++violations;
        }
      }
  }
  return {violations == 0 && instances >= 50,
          fmt::format("{} pseudorandom instances ({} planted), {} frontiers, {} with polluted embeddings, "
                      "{} violations",
                      instances, planted, frontiers, nonzero, violations)};
}

// Direct evaluation of both sides of the averaging fact, written independently.
// `tight` reports a premise sitting within rounding distance of its boundary.
struct Direct {
  bool premises;
  bool conclusion;
  bool tight;
};

Direct direct_concentration(const std::vector<double>& a, double target, double gamma, double delta) {
  long double sum = 0, squares = 0;
  std::size_t outside = 0;
  for (double x : a) {
    sum += x;
    squares += static_cast<long double>(x) * x;
    if (!(std::fabs(x - target) < delta * target)) ++outside;
  }
  const long double n = static_cast<long double>(a.size());
  const long double t = target;
  const long double sum_slack = sum - (1 - static_cast<long double>(gamma)) * n * t;
  const long double sq_slack = (1 + static_cast<long double>(gamma)) * n * t * t - squares;
  const bool tight = std::fabs(sum_slack) < 1e-9L * n * t || std::fabs(sq_slack) < 1e-9L * n * t * t;
  return {sum_slack >= 0 && sq_slack >= 0, static_cast<long double>(outside) < delta * n, tight};
}

// Smallest γ at which a symmetric spike construction breaks the implication:
// an even number j >= δn of entries at a(1 ± δ') with δ' just above δ keeps
// the mean exact and adds jδ'²a² to the sum of squares.
double adversarial_gamma(double delta) {
  const double dev = delta * 1.0001;
  const auto breaks = [&](double gamma) {
    for (std::size_t n = 20; n <= 400; n += 20) {
      std::size_t j = static_cast<std::size_t>(std::ceil(static_cast<long double>(delta) * n));
      j += j % 2;
      std::vector<double> a(n, 1.0);
      for (std::size_t t = 0; t < j; ++t) a[t] = t % 2 ? 1.0 - dev : 1.0 + dev;
      const auto d = direct_concentration(a, 1.0, gamma, delta);
      if (d.premises && !d.conclusion) return true;
    }
    return false;
  };
  double lo = 0.0, hi = 1.0;
  if (!breaks(hi)) return hi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (breaks(mid) ? hi : lo) = mid;
  }
  return hi;
}

Outcome ac9_facts() {
  std::string table;
  std::size_t sequences = 0, premised = 0, mismatched = 0, falsified = 0;
  CounterRng rng(9, 0);
  for (double delta : {0.1, 0.2, 0.3, 0.5}) {
    const double gamma = 0.3 * adversarial_gamma(delta);
    table += fmt::format("{}δ={}:γ={:.3g}", table.empty() ? "" : " ", delta, gamma);
    for (int t = 0; t < 2500; ++t) {
      const std::size_t n = 5 + rng.below(200);
      const double target = 0.5 + 10.0 * rng.uniform();
      const double spread = std::sqrt(3.0 * gamma) * 1.5 * rng.uniform();
      std::vector<double> a(n);
      for (auto& x : a) x = std::max(0.0, target * (1.0 + spread * (2.0 * rng.uniform() - 1.0)));
      if (rng.below(4) == 0) a[rng.below(n)] = target * (1.0 + 4.0 * delta);
      ++sequences;
      const auto got = concentration_check(a, target, gamma, delta);
      const auto d = direct_concentration(a, target, gamma, delta);
      if ((!d.tight && got.premises_hold != d.premises) || got.conclusion_holds != d.conclusion) ++mismatched;
      if (got.premises_hold) {
        ++premised;
        if (!got.conclusion_holds) ++falsified;
      }
    }
  }
  std::size_t gap_bad = 0;
  double worst = 0.0;
  for (int ai = 1; ai <= 9; ++ai)
    for (unsigned r = 1; r <= 3; ++r) {
      const double a = ai / 10.0;
      const double gap = binomial_ratio_gap(10000, a, r);
      // C(na, r) / (a^r C(n, r)) as a product of per-factor ratios.
      double ratio = 1.0;
      for (unsigned j = 0; j < r; ++j) ratio *= (10000.0 * a - j) / (a * (10000.0 - j));
      if (std::fabs(gap - std::fabs(ratio - 1.0)) > 1e-9) ++gap_bad;
      if (!(gap < 0.01)) ++gap_bad;
      worst = std::max(worst, gap);
    }
  return {mismatched == 0 && falsified == 0 && premised > 0 && gap_bad == 0,
          fmt::format("γ table {}; {} sequences, {} with premises, {} falsified, {} evaluator mismatches; ratio gap "
                      "max {:.2e} at n=10^4",
                      table, sequences, premised, falsified, mismatched, worst)};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HYPERCOUNT_CLI + "\" " + args + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

Outcome ac10_determinism() {
  const fs::path root = fs::temp_directory_path() / "hypercount-acceptance-determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string data = HYPERCOUNT_TEST_DATA;
  const std::string host = (root / "host.hg").string();
  if (run_cli(fmt::format("gen --kind binomial --n 30 --k 3 --p 0.3 --seed 5 --out \"{}\"", host)) != 0) {
    return {false, "could not generate the host"};
  }
  struct Invocation {
    std::string name;
    std::string args;  // {dir} is replaced by the per-thread output directory
    std::vector<std::string> files;
  };
  const std::vector<Invocation> runs = {
      {"run", fmt::format("run --config \"{}/ac10.cfg\" --out \"{{dir}}/run\"", data),
       {"run/records.json", "run/records.csv"}},
      {"check-tuple", fmt::format("check-tuple \"{}\" --d 2 --delta 0.3 --mode sampled --samples 20000 --seed 11 "
                                  "--json-out \"{{dir}}/tuple.json\"",
                                  host),
       {"tuple.json"}},
      {"check-pseudo", fmt::format("check-pseudo \"{}\" --d1 2 --C 3 --d2 2 --delta 0.5 --json-out \"{{dir}}/pseudo.json\"",
                                   host),
       {"pseudo.json"}},
      {"count", fmt::format("count --pattern k3-loose-path2 --host \"{}\" --induced-split --json-out \"{{dir}}/count.json\"",
                            host),
       {"count.json"}},
      {"gen", "gen --kind planted-bad --n 40 --k 3 --p 0.2 --seed 3 --out \"{dir}/planted.hg\"", {"planted.hg"}},
  };
  std::size_t compared = 0, differing = 0;
  std::string problems;
  for (const auto& inv : runs) {
    std::vector<std::string> baseline;
    for (int threads : {1, 2, 8}) {
      const fs::path dir = root / fmt::format("{}-t{}", inv.name, threads);
      fs::create_directories(dir);
      std::string args = inv.args;
      for (std::size_t at; (at = args.find("{dir}")) != std::string::npos;) args.replace(at, 5, dir.string());
      const int rc = run_cli(fmt::format("--threads {} {}", threads, args));
      if (rc != 0 && rc != 1) {
        problems += fmt::format(" {} exited {} at {} threads;", inv.name, rc, threads);
        ++differing;
        continue;
      }
      for (std::size_t f = 0; f < inv.files.size(); ++f) {
        const auto body = slurp(dir / inv.files[f]);
        if (threads == 1) {
          baseline.push_back(body);
          if (body.empty()) {
            problems += fmt::format(" {} wrote nothing;", inv.files[f]);
            ++differing;
          }
          continue;
        }
        ++compared;
        if (f >= baseline.size() || body != baseline[f]) {
          ++differing;
          problems += fmt::format(" {} differs at {} threads;", inv.files[f], threads);
        }
      }
    }
  }
  fs::remove_all(root);
  return {differing == 0 && compared > 0,
          fmt::format("{} outputs compared against 1 thread at 2 and 8 threads, {} differ{}", compared, differing,
                      problems)};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments restrict the run to the named criteria, e.g. "AC9".
  const std::vector<std::string> only(argv + 1, argv + argc);
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"AC1", "backtracking count equals brute force", ac1_oracle_equivalence},
      {"AC2", "extension bound never violated", ac2_extension_lemma},
      {"AC3", "prefix orderings start with W and stay D_H-degenerate", ac3_prefix_orderings},
      {"AC4", "greedy degeneracy equals exhaustive value", ac4_degeneracy},
      {"AC5", "BDD at i=k-1 implies BDD at lower i", ac5_bdd_lower_levels},
      {"AC6", "relative error band shrinks with n", ac6_theorem_band},
      {"AC7", "non-induced count within the constant bound", ac7_non_induced},
      {"AC8", "polluted count within its bound", ac8_polluted},
      {"AC9", "concentration and binomial ratio facts", ac9_facts},
      {"AC10", "CLI output identical across worker counts", ac10_determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    all = all && out.pass;
    std::cout << c.id << (out.pass ? " PASS" : " FAIL") << ": " << c.title << " -- " << out.detail << std::endl;
  }
  return all ? 0 : 1;
}
