#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypercount/counting.hpp"
#include "hypercount/error.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/harness.hpp"
#include "hypercount/hypergraph.hpp"
#include "hypercount/json_io.hpp"
#include "hypercount/parallel.hpp"
#include "hypercount/properties.hpp"
#include "hypercount/structure.hpp"

namespace hc = hypercount;

namespace {

// Exit codes: 0 success / property holds / no assertion failed,
// 1 property fails or an assertion failed, 2 usage or input error.
constexpr int kFailed = 1;
constexpr int kError = 2;

void emit(const std::string& json, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << json;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hc::Error(hc::ErrorKind::io, "cannot write '" + path + "'");
  out << json;
}

std::vector<hc::Vertex> parse_list(const std::string& text) {
  std::vector<hc::Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma - pos);
    out.push_back(static_cast<hc::Vertex>(std::stoul(item)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// "w0:x0,w1:x1" -> (W, X)
hc::PinSpec parse_pins(const std::string& text) {
  hc::PinSpec pins;
  if (text.empty()) return pins;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw hc::Error(hc::ErrorKind::invalid_argument, "pin '" + item + "' is not of the form w:x");
    }
    try {
      pins.pattern.push_back(static_cast<hc::Vertex>(std::stoul(item.substr(0, colon))));
      pins.host.push_back(static_cast<hc::Vertex>(std::stoul(item.substr(colon + 1))));
    } catch (const std::logic_error&) {
      throw hc::Error(hc::ErrorKind::invalid_argument, "pin '" + item + "' is not numeric");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return pins;
}

struct ScanFlags {
  std::string mode = "exact";
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  std::uint64_t exact_limit = 2'000'000;
  std::size_t witness_cap = 16;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    cmd->add_option("--samples", samples, "families sampled per family size");
    cmd->add_option("--seed", seed, "sampling seed");
    cmd->add_option("--exact-limit", exact_limit, "largest family space scanned exactly");
    cmd->add_option("--witness-cap", witness_cap, "maximum witnesses reported");
  }

  hc::ScanSettings settings(std::size_t workers) const {
    hc::ScanSettings s;
    s.mode = mode == "exact" ? hc::CheckMode::exact : hc::CheckMode::sampled;
    s.samples = samples;
    s.seed = seed;
    s.exact_limit = exact_limit;
    s.witness_cap = witness_cap;
    s.workers = workers;
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercount: pseudorandom hypergraph properties and embedding counts"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (default: HYPERCOUNT_THREADS or all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  std::string gen_kind = "binomial", gen_out, gen_target;
  hc::GenSpec spec;
  std::optional<std::uint64_t> gen_edges;
  gen->add_option("--kind", gen_kind, "binomial, fixed-edges, complete, loose-path, loose-cycle, matching, planted-bad");
  gen->add_option("--n", spec.n, "vertex count");
  gen->add_option("--k", spec.k, "uniformity");
  gen->add_option("--p", spec.p, "edge probability or density");
  gen->add_option("--edges", gen_edges, "fixed-edges: exact edge count");
  gen->add_option("--length", spec.length, "loose-path / loose-cycle / matching: number of edges");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--target", gen_target, "planted-bad: comma-separated (k-1)-set");
  gen->add_option("--boost", spec.boost, "planted-bad: neighborhood inflation factor");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // profile
  auto* prof = app.add_subcommand("profile", "print the structure profile of a hypergraph as JSON");
  std::string prof_file;
  prof->add_option("file", prof_file, "hypergraph file")->required();

  // check-bdd
  auto* bdd = app.add_subcommand("check-bdd", "check BDD_i(d, C, p)");
  std::string bdd_file, bdd_out;
  hc::BddParams bdd_params;
  std::optional<std::size_t> bdd_i;
  ScanFlags bdd_scan;
  bdd->add_option("host", bdd_file, "hypergraph file")->required();
  bdd->add_option("--d", bdd_params.d, "maximum family size");
  bdd->add_option("--C", bdd_params.C, "bound constant");
  bdd->add_option("--i", bdd_i, "subset size (default k-1)");
  bdd->add_option("--json-out", bdd_out, "write the verdict here (default stdout)");
  bdd_scan.attach(bdd);

  // check-tuple
  auto* tuple = app.add_subcommand("check-tuple", "check TUPLE_i(d, delta, p)");
  std::string tuple_file, tuple_out;
  hc::TupleParams tuple_params;
  std::optional<std::size_t> tuple_i;
  ScanFlags tuple_scan;
  tuple->add_option("host", tuple_file, "hypergraph file")->required();
  tuple->add_option("--d", tuple_params.d, "maximum family size");
  tuple->add_option("--delta", tuple_params.delta, "deviation and exception rate");
  tuple->add_option("--i", tuple_i, "subset size (default k-1)");
  tuple->add_option("--json-out", tuple_out, "write the verdict here (default stdout)");
  tuple_scan.attach(tuple);

  // check-pseudo
  auto* pseudo = app.add_subcommand("check-pseudo", "check (d1, C, d2, delta, p)-pseudorandomness");
  std::string pseudo_file, pseudo_out;
  hc::PseudoParams pseudo_params;
  ScanFlags pseudo_scan;
  pseudo->add_option("host", pseudo_file, "hypergraph file")->required();
  pseudo->add_option("--d1", pseudo_params.d1, "BDD depth");
  pseudo->add_option("--C", pseudo_params.C, "BDD constant");
  pseudo->add_option("--d2,--d", pseudo_params.d2, "TUPLE depth");
  pseudo->add_option("--delta", pseudo_params.delta, "TUPLE deviation");
  pseudo->add_option("--json-out", pseudo_out, "write the verdict here (default stdout)");
  pseudo_scan.attach(pseudo);

  // count
  auto* count = app.add_subcommand("count", "count embeddings of a pattern into a host");
  std::string count_pattern, count_host, count_pins, count_out;
  hc::CountOptions count_options;
  count->add_option("--pattern", count_pattern, "pattern hypergraph file or catalog name")->required();
  count->add_option("--host", count_host, "host hypergraph file")->required();
  count->add_option("--pins", count_pins, "pins as w0:x0,w1:x1,...");
  count->add_flag("--induced-split", count_options.induced_split, "also split into induced / non-induced");
  count->add_option("--node-budget", count_options.node_budget, "refuse searches larger than this");
  count->add_option("--json-out", count_out, "write the report here (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "run an experiment config");
  std::string run_config, run_out = "results";
  run->add_option("--config", run_config, "experiment config file")->required();
  run->add_option("--out", run_out, "output directory");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list the built-in patterns");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::size_t workers = hc::resolve_workers(threads);
    if (gen->parsed()) {
      spec.kind = hc::parse_gen_kind(gen_kind);
      spec.edges = gen_edges;
      if (!gen_target.empty()) spec.target = parse_list(gen_target);
      emit(hc::write_hypergraph(hc::generate(spec)), gen_out);
      return 0;
    }
    if (prof->parsed()) {
      emit(hc::profile_json(hc::profile(hc::load_hypergraph(prof_file))), "-");
      return 0;
    }
    if (bdd->parsed()) {
      bdd_params.i = bdd_i;
      bdd_params.scan = bdd_scan.settings(workers);
      const auto v = hc::check_bdd(hc::load_hypergraph(bdd_file), bdd_params);
      emit(hc::verdict_json(v), bdd_out);
      return v.holds ? 0 : kFailed;
    }
    if (tuple->parsed()) {
      tuple_params.i = tuple_i;
      tuple_params.scan = tuple_scan.settings(workers);
      const auto v = hc::check_tuple(hc::load_hypergraph(tuple_file), tuple_params);
      emit(hc::verdict_json(v), tuple_out);
      return v.holds ? 0 : kFailed;
    }
    if (pseudo->parsed()) {
      pseudo_params.scan = pseudo_scan.settings(workers);
      const auto v = hc::check_pseudorandom(hc::load_hypergraph(pseudo_file), pseudo_params);
      emit(hc::pseudo_verdict_json(v), pseudo_out);
      return v.holds ? 0 : kFailed;
    }
    if (count->parsed()) {
      count_options.workers = workers;
      std::optional<hc::Hypergraph> pattern;
      for (const auto& entry : hc::pattern_catalog())
        if (entry.name == count_pattern) pattern = entry.pattern;
      if (!pattern) pattern = hc::load_hypergraph(count_pattern);
      const auto report =
          hc::count_embeddings(*pattern, hc::load_hypergraph(count_host), parse_pins(count_pins), count_options);
      emit(hc::count_report_json(report), count_out);
      return 0;
    }
    if (run->parsed()) {
      const auto exp = hc::load_experiment(run_config);
      const auto records = hc::run_experiment(exp, workers);
      hc::write_reports(exp, records, run_out);
      std::size_t pass = 0, fail = 0, skip = 0;
      for (const auto& r : records) {
        for (const auto& a : r.assertions) {
          if (a.outcome == hc::Outcome::pass) ++pass;
          if (a.outcome == hc::Outcome::fail) ++fail;
          if (a.outcome == hc::Outcome::skip) ++skip;
        }
      }
      std::cerr << records.size() << " runs: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
      return fail == 0 ? 0 : kFailed;
    }
    if (catalog->parsed()) {
      for (const auto& entry : hc::pattern_catalog()) {
        std::cout << entry.name << "  k=" << entry.pattern.uniformity() << " m=" << entry.pattern.vertex_count()
                  << " e=" << entry.pattern.edge_count() << " d_H=" << entry.profile.degeneracy
                  << " D_H=" << entry.profile.cap << "\n";
      }
      return 0;
    }
  } catch (const hc::Error& e) {
    std::cerr << "error (" << hc::to_string(e.kind()) << "): " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
