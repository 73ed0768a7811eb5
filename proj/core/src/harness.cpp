#include "hypercount/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "hypercount/config.hpp"
#include "hypercount/error.hpp"
#include "hypercount/json_io.hpp"
#include "hypercount/parallel.hpp"
#include "hypercount/rng.hpp"
#include "hypercount/structure.hpp"

namespace hypercount {

namespace {

constexpr std::pair<AssertionKind, std::string_view> kAssertionNames[] = {
    {AssertionKind::extension, "extension"}, {AssertionKind::thm14_band, "thm14-band"},
    {AssertionKind::cor33, "cor33"},         {AssertionKind::cor34, "cor34"},
    {AssertionKind::lemma21, "lemma21"},     {AssertionKind::lemma25, "lemma25"},
};

// Pins tried per prefix length by the extension assertion.
constexpr std::size_t kPinTrials = 3;

}  // namespace

std::string to_string(AssertionKind kind) {
  for (const auto& [k, name] : kAssertionNames)
    if (k == kind) return std::string(name);
  return "unknown";
}

AssertionKind parse_assertion(std::string_view name) {
  std::string norm(name);
  std::replace(norm.begin(), norm.end(), '_', '-');
  for (const auto& [k, n] : kAssertionNames)
    if (n == norm) return k;
  throw Error(ErrorKind::config, "unknown assertion '" + std::string(name) + "'");
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skip:
      return "skip";
  }
  return "skip";
}

Outcome parse_outcome(std::string_view text) {
  if (text == "pass") return Outcome::pass;
  if (text == "fail") return Outcome::fail;
  if (text == "skip") return Outcome::skip;
  throw Error(ErrorKind::parse, "unknown outcome '" + std::string(text) + "'");
}

Experiment parse_experiment(std::string_view text, const std::string& base_dir) {
  const Config cfg = Config::parse(text);
  cfg.require_known({"name", "pattern", "assertions",
                     "host.kind", "host.k", "host.n", "host.p", "host.p_scale", "host.p_exponent", "host.seeds",
                     "host.edges", "host.length", "host.boost", "host.target",
                     "params.C", "params.delta", "params.delta_prime", "params.d", "params.epsilon",
                     "params.mode", "params.samples", "params.sample_seed", "params.exact_limit",
                     "params.witness_cap", "params.node_budget",
                     "output.json", "output.csv", "output.timing"});
  Experiment exp;
  exp.name = cfg.get_string("name");
  exp.pattern = cfg.get_string("pattern");
  const auto& catalog = pattern_catalog();
  const bool builtin = std::any_of(catalog.begin(), catalog.end(), [&](const auto& e) { return e.name == exp.pattern; });
  if (!builtin && std::filesystem::path(exp.pattern).is_relative()) {
    exp.pattern = (std::filesystem::path(base_dir) / exp.pattern).lexically_normal().string();
  }
  for (const auto& a : cfg.get_strings("assertions")) {
    // "thm14-band(0.2)" carries its ε inline.
    if (const auto open = a.find('('); open != std::string::npos) {
      if (a.back() != ')') throw Error(ErrorKind::config, "bad assertion '" + a + "'");
      exp.assertions.push_back(parse_assertion(a.substr(0, open)));
      exp.epsilon = std::stod(a.substr(open + 1, a.size() - open - 2));
    } else {
      exp.assertions.push_back(parse_assertion(a));
    }
  }
  if (exp.assertions.empty()) throw Error(ErrorKind::config, "an experiment needs at least one assertion");
  if (cfg.has("params.epsilon")) exp.epsilon = cfg.get_double("params.epsilon");

  exp.host.kind = parse_gen_kind(cfg.get_string("host.kind", "binomial"));
  exp.host.k = static_cast<std::size_t>(cfg.get_int("host.k"));
  for (auto n : cfg.get_ints("host.n")) {
    if (n < 1) throw Error(ErrorKind::config, "host.n entries must be positive");
    exp.ns.push_back(static_cast<std::size_t>(n));
  }
  if (cfg.has("host.p_scale")) {
    exp.p_scale = cfg.get_double("host.p_scale");
    exp.p_exponent = cfg.get_double("host.p_exponent");
    if (cfg.has("host.p")) throw Error(ErrorKind::config, "give either host.p or host.p_scale, not both");
  } else if (cfg.has("host.p")) {
    exp.ps = cfg.get_doubles("host.p");
  } else if (exp.host.kind == GenKind::binomial || exp.host.kind == GenKind::planted_bad ||
             (exp.host.kind == GenKind::fixed_edges && !cfg.has("host.edges"))) {
    throw Error(ErrorKind::config, "random hosts need host.p or host.p_scale");
  }
  if (exp.ps.empty() && !exp.p_scale) exp.ps.push_back(0.0);
  for (auto s : cfg.get_ints("host.seeds")) exp.seeds.push_back(static_cast<std::uint64_t>(s));
  if (cfg.has("host.edges")) exp.host.edges = static_cast<std::uint64_t>(cfg.get_int("host.edges"));
  exp.host.length = static_cast<std::size_t>(cfg.get_int("host.length", 0));
  exp.host.boost = cfg.get_double("host.boost", exp.host.boost);
  if (cfg.has("host.target")) {
    for (auto v : cfg.get_ints("host.target")) exp.host.target.push_back(static_cast<Vertex>(v));
  }
  if (exp.ns.empty() || exp.seeds.empty()) throw Error(ErrorKind::config, "host.n and host.seeds must be non-empty");

  exp.C = cfg.get_double("params.C", exp.C);
  exp.delta = cfg.get_double("params.delta", exp.delta);
  exp.delta_prime = cfg.get_double("params.delta_prime", exp.delta_prime);
  exp.d = static_cast<std::size_t>(cfg.get_int("params.d", static_cast<std::int64_t>(exp.d)));
  const std::string mode = cfg.get_string("params.mode", "exact");
  if (mode == "exact") {
    exp.scan.mode = CheckMode::exact;
  } else if (mode == "sampled") {
    exp.scan.mode = CheckMode::sampled;
  } else {
    throw Error(ErrorKind::config, "params.mode must be \"exact\" or \"sampled\"");
  }
  exp.scan.samples = static_cast<std::uint64_t>(cfg.get_int("params.samples", static_cast<std::int64_t>(exp.scan.samples)));
  exp.scan.seed = static_cast<std::uint64_t>(cfg.get_int("params.sample_seed", static_cast<std::int64_t>(exp.scan.seed)));
  exp.scan.exact_limit =
      static_cast<std::uint64_t>(cfg.get_int("params.exact_limit", static_cast<std::int64_t>(exp.scan.exact_limit)));
  exp.scan.witness_cap =
      static_cast<std::size_t>(cfg.get_int("params.witness_cap", static_cast<std::int64_t>(exp.scan.witness_cap)));
  exp.node_budget =
      static_cast<std::uint64_t>(cfg.get_int("params.node_budget", static_cast<std::int64_t>(exp.node_budget)));
  if (!(exp.C > 1.0)) throw Error(ErrorKind::config, "params.C must exceed 1");
  if (!(exp.delta > 0.0 && exp.delta < 1.0) || !(exp.delta_prime > 0.0 && exp.delta_prime < 1.0)) {
    throw Error(ErrorKind::config, "params.delta and params.delta_prime must lie in (0, 1)");
  }

  exp.json_out = cfg.get_string("output.json", exp.json_out);
  exp.csv_out = cfg.get_string("output.csv", exp.csv_out);
  exp.timing_out = cfg.get_string("output.timing", exp.timing_out);
  return exp;
}

Experiment load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment(buf.str(), std::filesystem::path(path).parent_path().string());
}

namespace {

Hypergraph load_pattern(const Experiment& exp) {
  for (const auto& entry : pattern_catalog())
    if (entry.name == exp.pattern) return entry.pattern;
  return load_hypergraph(exp.pattern);
}

std::string fmt_double(double x) { return fmt::format("{}", x); }

/// Lazily evaluated property checks shared by the assertions of one run.
class RunContext {
 public:
  RunContext(const Experiment& exp, const Hypergraph& h, const Hypergraph& g, RunRecord& rec)
      : exp_(exp), h_(h), g_(g), rec_(rec), prof_(profile(h)) {
    scan_ = exp.scan;
    scan_.workers = 1;
  }

  const StructureProfile& prof() const { return prof_; }

  /// Exact BDD(D_H, C); nullopt when the exact scan is infeasible.
  std::optional<bool> exact_bdd() {
    if (!bdd_) {
      BddParams params;
      params.d = prof_.cap;
      params.C = exp_.C;
      params.scan = scan_;
      params.scan.mode = CheckMode::exact;
      params.scan.witness_cap = 1;
      bdd_ = evaluate("bdd(D_H)", [&] { return check_bdd(g_, params); });
    }
    return *bdd_;
  }

  /// (D_H, C, d_H, δ, p)-pseudorandomness in the configured mode.
  std::optional<bool> pseudo_main() {
    if (!pseudo_main_) {
      pseudo_main_ = evaluate_pseudo("pseudorandom(D_H,C,d_H,delta)", prof_.cap, prof_.degeneracy, exp_.delta);
    }
    return *pseudo_main_;
  }

  /// (2, C, 2, δ', p)-pseudorandomness, the weaker hypothesis.
  std::optional<bool> pseudo_weak() {
    if (!pseudo_weak_) pseudo_weak_ = evaluate_pseudo("pseudorandom(2,C,2,delta_prime)", 2, 2, exp_.delta_prime);
    return *pseudo_weak_;
  }

  std::optional<bool> tuple(const std::string& label, std::size_t d, std::size_t i) {
    TupleParams params;
    params.d = d;
    params.delta = exp_.delta;
    params.i = i;
    params.scan = scan_;
    params.scan.witness_cap = 1;
    return evaluate(label, [&] { return check_tuple(g_, params); });
  }

  ScanSettings scan() const { return scan_; }

 private:
  template <class Fn>
  std::optional<bool> evaluate(const std::string& label, Fn&& fn) {
    if (g_.vertex_count() < g_.uniformity()) return std::nullopt;
    try {
      const Verdict v = fn();
      record(label, v);
      return v.holds;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
      rec_.verdicts.push_back({label + ": " + e.what(), false, "exact", 0, 0.0});
      return std::nullopt;
    }
  }

  std::optional<bool> evaluate_pseudo(const std::string& label, std::size_t d1, std::size_t d2, double delta) {
    if (g_.vertex_count() < g_.uniformity()) return std::nullopt;
    if (d1 == 0 || d2 == 0) return std::nullopt;
    PseudoParams params;
    params.d1 = d1;
    params.C = exp_.C;
    params.d2 = d2;
    params.delta = delta;
    params.scan = scan_;
    params.scan.witness_cap = 1;
    try {
      const PseudoVerdict v = check_pseudorandom(g_, params);
      record(label + " bdd", v.bdd);
      record(label + " tuple", v.tuple);
      return v.holds;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
      rec_.verdicts.push_back({label + ": " + e.what(), false, "exact", 0, 0.0});
      return std::nullopt;
    }
  }

  void record(const std::string& label, const Verdict& v) {
    rec_.verdicts.push_back(
        {label, v.holds, v.mode == CheckMode::exact ? "exact" : "sampled", v.checked, v.bad_fraction});
  }

  const Experiment& exp_;
  const Hypergraph& h_;
  const Hypergraph& g_;
  RunRecord& rec_;
  StructureProfile prof_;
  ScanSettings scan_;
  std::optional<std::optional<bool>> bdd_;
  std::optional<std::optional<bool>> pseudo_main_;
  std::optional<std::optional<bool>> pseudo_weak_;
};

AssertionResult skip(std::string name, std::string why) { return {std::move(name), Outcome::skip, std::move(why)}; }

AssertionResult assert_extension(const Experiment& exp, const Hypergraph& h, const Hypergraph& g, RunContext& ctx,
                                 std::uint64_t seed) {
  const std::string name = to_string(AssertionKind::extension);
  if (!ctx.prof().linear) return skip(name, "pattern is not linear");
  if (h.vertex_count() > g.vertex_count()) return skip(name, "pattern larger than host");
  const auto bdd = ctx.exact_bdd();
  if (!bdd) return skip(name, "exact BDD(D_H,C) check infeasible");
  if (!*bdd) return skip(name, "host fails BDD(D_H,C)");
  CountOptions options;
  options.node_budget = exp.node_budget;
  options.workers = 1;
  const Degeneracy deg = degeneracy(h);
  const std::size_t max_len = std::min(h.vertex_count(), std::max(h.uniformity(), deg.value));
  std::size_t checks = 0, violations = 0;
  double worst = 0.0;
  try {
    const ExtensionBoundChecker checker(h, g, exp.C, options);
    for (std::size_t len = 0; len <= max_len; ++len) {
      PinSpec pins;
      pins.pattern.assign(deg.ordering.sequence.begin(), deg.ordering.sequence.begin() + static_cast<std::ptrdiff_t>(len));
      const std::size_t trials = len == 0 ? 1 : kPinTrials;
      for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(seed, 100 + len, t);
        pins.host.clear();
        while (pins.host.size() < len) {
          const auto x = static_cast<Vertex>(rng.below(g.vertex_count()));
          if (std::find(pins.host.begin(), pins.host.end(), x) == pins.host.end()) pins.host.push_back(x);
        }
        const ExtensionCheck c = checker.check(pins);
        ++checks;
        if (!c.holds) ++violations;
        if (c.rhs > 0) worst = std::max(worst, static_cast<double>(c.lhs) / c.rhs);
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::budget_exceeded) return skip(name, e.what());
    throw;
  }
  return {name, violations == 0 ? Outcome::pass : Outcome::fail,
          fmt::format("checks={} violations={} max_ratio={}", checks, violations, worst)};
}

AssertionResult assert_thm14(const Experiment& exp, const Hypergraph& h, RunContext& ctx, const RunRecord& rec) {
  const std::string name = to_string(AssertionKind::thm14_band);
  if (h.vertex_count() < 4) return skip(name, "pattern has fewer than 4 vertices");
  if (!ctx.prof().linear || !ctx.prof().connector_free) return skip(name, "pattern is not linear and connector-free");
  if (!(rec.p > 0.0)) return skip(name, "host density is 0");
  if (!rec.count) return skip(name, "no count: " + rec.count_note);
  const auto pseudo = ctx.pseudo_main();
  if (!pseudo) return skip(name, "pseudorandomness check infeasible");
  if (!*pseudo) return skip(name, "host is not (D_H,C,d_H,delta,p)-pseudorandom");
  const double err = rec.count->relative_error.value_or(0.0);
  return {name, err < exp.epsilon ? Outcome::pass : Outcome::fail,
          fmt::format("relative_error={} epsilon={}", err, exp.epsilon)};
}

AssertionResult assert_cor33(const Experiment& exp, const Hypergraph& h, RunContext& ctx, const RunRecord& rec) {
  const std::string name = to_string(AssertionKind::cor33);
  if (!ctx.prof().linear) return skip(name, "pattern is not linear");
  if (h.vertex_count() < h.uniformity()) return skip(name, "pattern has fewer than k vertices");
  if (!rec.count) return skip(name, "no count: " + rec.count_note);
  if (!rec.count->non_induced) return skip(name, "induced split disabled for patterns this large");
  const auto bdd = ctx.exact_bdd();
  if (!bdd) return skip(name, "exact BDD(D_H,C) check infeasible");
  if (!*bdd) return skip(name, "host fails BDD(D_H,C)");
  const double bound = non_induced_bound(h.uniformity(), h.vertex_count(), exp.C, rec.n, rec.p, h.edge_count());
  const auto measured = *rec.count->non_induced;
  return {name, static_cast<double>(measured) <= bound ? Outcome::pass : Outcome::fail,
          fmt::format("non_induced={} bound={}", measured, bound)};
}

AssertionResult assert_cor34(const Experiment& exp, const Hypergraph& h, const Hypergraph& g, RunContext& ctx,
                             const RunRecord& rec) {
  const std::string name = to_string(AssertionKind::cor34);
  if (!ctx.prof().linear) return skip(name, "pattern is not linear");
  if (h.vertex_count() > g.vertex_count()) return skip(name, "pattern larger than host");
  const auto pseudo = ctx.pseudo_main();
  if (!pseudo) return skip(name, "pseudorandomness check infeasible");
  if (!*pseudo) return skip(name, "host is not (D_H,C,d_H,delta,p)-pseudorandom");
  const std::vector<Vertex> order = degeneracy(h).ordering.sequence;
  std::size_t frontiers = 0, violations = 0;
  std::uint64_t polluted_total = 0;
  for (std::size_t frontier = 2; frontier <= h.vertex_count(); ++frontier) {
    const std::span<const Vertex> prefix(order.data(), frontier - 1);
    const Hypergraph before = induced_relabeled(h, prefix);
    if (estimate_search_nodes(before, g) > static_cast<double>(exp.node_budget)) {
      return skip(name, "estimated search exceeds the node budget");
    }
    const CleanCounts counts = count_clean_polluted(h, order, frontier, g, exp.delta);
    const double bound = pollution_bound(exp.delta, counts.r, h.uniformity(), exp.C, frontier, rec.n, rec.p,
                                         counts.edges);
    ++frontiers;
    polluted_total += counts.polluted;
    if (!counts.by_convention && static_cast<double>(counts.polluted) > bound) ++violations;
  }
  return {name, violations == 0 ? Outcome::pass : Outcome::fail,
          fmt::format("frontiers={} violations={} polluted={}", frontiers, violations, polluted_total)};
}

AssertionResult assert_lemma21(const Experiment& exp, RunContext& ctx) {
  const std::string name = to_string(AssertionKind::lemma21);
  const auto pre = ctx.pseudo_weak();
  if (!pre) return skip(name, "pseudorandomness check infeasible");
  if (!*pre) return skip(name, "host is not (2,C,2,delta_prime,p)-pseudorandom");
  const auto concl = ctx.tuple(fmt::format("tuple(d={},delta)", exp.d), exp.d, exp.host.k - 1);
  if (!concl) return skip(name, "exact TUPLE(d) check infeasible");
  return {name, *concl ? Outcome::pass : Outcome::fail, fmt::format("tuple_d={} holds={}", exp.d, *concl)};
}

AssertionResult assert_lemma25(RunContext& ctx) {
  const std::string name = to_string(AssertionKind::lemma25);
  const auto pre = ctx.pseudo_weak();
  if (!pre) return skip(name, "pseudorandomness check infeasible");
  if (!*pre) return skip(name, "host is not (2,C,2,delta_prime,p)-pseudorandom");
  const auto concl = ctx.tuple("tuple_1(2,delta)", 2, 1);
  if (!concl) return skip(name, "exact TUPLE_1(2) check infeasible");
  return {name, *concl ? Outcome::pass : Outcome::fail, fmt::format("tuple1_holds={}", *concl)};
}

}  // namespace

RunRecord run_single(const Experiment& exp, const Hypergraph& pattern, std::size_t n, double p_target,
                     std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.experiment = exp.name;
  rec.pattern = exp.pattern;
  rec.seed = seed;
  rec.n = n;
  rec.p_target = p_target;

  GenSpec spec = exp.host;
  spec.n = n;
  spec.p = p_target;
  spec.seed = seed;
  const Hypergraph g = generate(spec);
  rec.n = g.vertex_count();
  rec.edges = g.edge_count();
  rec.p = g.vertex_count() >= g.uniformity() ? density(g).value : 0.0;

  if (pattern.uniformity() != g.uniformity()) {
    throw Error(ErrorKind::config, "pattern and host uniformities differ");
  }
  const bool wants_split =
      std::find(exp.assertions.begin(), exp.assertions.end(), AssertionKind::cor33) != exp.assertions.end();
  CountOptions options;
  options.induced_split = wants_split;
  options.node_budget = exp.node_budget;
  options.workers = 1;
  try {
    rec.count = count_embeddings(pattern, g, {}, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget_exceeded) throw;
    rec.count_note = e.what();
  }

  RunContext ctx(exp, pattern, g, rec);
  for (AssertionKind kind : exp.assertions) {
    switch (kind) {
      case AssertionKind::extension:
        rec.assertions.push_back(assert_extension(exp, pattern, g, ctx, seed));
        break;
      case AssertionKind::thm14_band:
        rec.assertions.push_back(assert_thm14(exp, pattern, ctx, rec));
        break;
      case AssertionKind::cor33:
        rec.assertions.push_back(assert_cor33(exp, pattern, ctx, rec));
        break;
      case AssertionKind::cor34:
        rec.assertions.push_back(assert_cor34(exp, pattern, g, ctx, rec));
        break;
      case AssertionKind::lemma21:
        rec.assertions.push_back(assert_lemma21(exp, ctx));
        break;
      case AssertionKind::lemma25:
        rec.assertions.push_back(assert_lemma25(ctx));
        break;
    }
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<RunRecord> run_experiment(const Experiment& exp, std::size_t workers) {
  const Hypergraph pattern = load_pattern(exp);
  if (exp.p_scale) {
    const std::size_t cap = profile(pattern).cap;
    if (cap > 0 && !(exp.p_exponent < 1.0 / static_cast<double>(cap))) {
      throw Error(ErrorKind::config, "p_exponent must stay below 1/D_H = " + fmt_double(1.0 / static_cast<double>(cap)));
    }
  }
  struct Job {
    std::size_t n;
    double p;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto n : exp.ns) {
    std::vector<double> ps = exp.ps;
    if (exp.p_scale) ps = {std::min(1.0, *exp.p_scale * std::pow(static_cast<double>(n), -exp.p_exponent))};
    for (double p : ps)
      for (auto seed : exp.seeds) jobs.push_back({n, p, seed});
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::tie(a.n, a.seed, a.p) < std::tie(b.n, b.seed, b.p);
  });
  std::vector<RunRecord> records(jobs.size());
  parallel_for(jobs.size(), resolve_workers(workers), [&](std::size_t t) {
    records[t] = run_single(exp, pattern, jobs[t].n, jobs[t].p, jobs[t].seed);
  });
  return records;
}

bool any_failed(const std::vector<RunRecord>& records) {
  for (const auto& r : records)
    for (const auto& a : r.assertions)
      if (a.outcome == Outcome::fail) return true;
  return false;
}

void write_reports(const Experiment& exp, const std::vector<RunRecord>& records, const std::string& dir) {
  if (records.empty()) throw Error(ErrorKind::invalid_argument, "no records to report");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create '" + dir + "': " + ec.message());
  const auto write = [&](const std::string& name, const std::string& body) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    out << body;
    if (!out) throw Error(ErrorKind::io, "write failed for '" + path.string() + "'");
  };
  write(exp.json_out, records_json(records));
  write(exp.csv_out, records_csv(records));
  std::string timing = "experiment,n,p_target,seed,wall_seconds\n";
  for (const auto& r : records) {
    timing += fmt::format("{},{},{},{},{:.6f}\n", r.experiment, r.n, r.p_target, r.seed, r.wall_seconds);
  }
  write(exp.timing_out, timing);
}

}  // namespace hypercount
