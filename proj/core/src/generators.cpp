#include "hypercount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "hypercount/error.hpp"
#include "hypercount/rng.hpp"

namespace hypercount {

namespace {

// Streams of the counter RNG, one per purpose so kinds never share draws.
constexpr std::uint64_t kEdgeStream = 1;
constexpr std::uint64_t kPlantStream = 2;

// Coin-per-set enumeration below this many k-sets, geometric skips above.
constexpr std::uint64_t kCoinLimit = 1'000'000;

constexpr std::pair<GenKind, std::string_view> kKindNames[] = {
    {GenKind::binomial, "binomial"},       {GenKind::fixed_edges, "fixed-edges"},
    {GenKind::complete, "complete"},       {GenKind::loose_path, "loose-path"},
    {GenKind::loose_cycle, "loose-cycle"}, {GenKind::matching, "matching"},
    {GenKind::planted_bad, "planted-bad"},
};

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_argument, "p must lie in [0, 1]");
}

std::uint64_t total_sets(const GenSpec& spec) {
  if (spec.k < 2) throw Error(ErrorKind::invalid_argument, "uniformity must be at least 2");
  if (spec.n < spec.k) throw Error(ErrorKind::infeasible, "need n >= k");
  return binomial(spec.n, spec.k);
}

std::vector<VertexSet> binomial_edges(const GenSpec& spec) {
  require_probability(spec.p);
  const std::uint64_t total = total_sets(spec);
  CounterRng rng(spec.seed, kEdgeStream);
  std::vector<VertexSet> edges;
  if (spec.p == 0.0) return edges;
  if (total <= kCoinLimit || spec.p == 1.0) {
    for (std::uint64_t r = 0; r < total; ++r)
      if (spec.p == 1.0 || rng.uniform() < spec.p) edges.push_back(colex_unrank(r, spec.k));
    return edges;
  }
  // Gap to the next included set is geometric with success probability p.
  const double log_q = std::log1p(-spec.p);
  std::uint64_t r = 0;
  while (true) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double skip = std::floor(std::log(u) / log_q);
    if (skip >= static_cast<double>(total - r)) break;
    r += static_cast<std::uint64_t>(skip);
    edges.push_back(colex_unrank(r, spec.k));
    if (++r >= total) break;
  }
  return edges;
}

std::vector<VertexSet> fixed_edges(const GenSpec& spec) {
  const std::uint64_t total = total_sets(spec);
  std::uint64_t m = 0;
  if (spec.edges) {
    m = *spec.edges;
  } else {
    require_probability(spec.p);
    m = fixed_edge_target(spec.n, spec.k, spec.p);
  }
  if (m > total) throw Error(ErrorKind::infeasible, "edge count exceeds C(n, k)");
  // Floyd's algorithm: m distinct ranks, uniform over all m-subsets.
  CounterRng rng(spec.seed, kEdgeStream);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());
  std::vector<VertexSet> edges;
  edges.reserve(m);
  for (auto r : ranks) edges.push_back(colex_unrank(r, spec.k));
  return edges;
}

std::vector<VertexSet> complete_edges(const GenSpec& spec) {
  const std::uint64_t total = total_sets(spec);
  if (total > 50'000'000) throw Error(ErrorKind::infeasible, "complete hypergraph too large");
  std::vector<VertexSet> edges;
  edges.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) edges.push_back(colex_unrank(r, spec.k));
  return edges;
}

std::size_t pattern_vertices(const GenSpec& spec, std::size_t needed) {
  if (spec.n == 0) return needed;
  if (spec.n < needed) {
    throw Error(ErrorKind::infeasible, "n=" + std::to_string(spec.n) + " is below the " +
                                           std::to_string(needed) + " vertices the pattern needs");
  }
  return spec.n;
}

Hypergraph loose_path(const GenSpec& spec) {
  if (spec.k < 2) throw Error(ErrorKind::invalid_argument, "uniformity must be at least 2");
  if (spec.length < 1) throw Error(ErrorKind::invalid_argument, "loose path needs length >= 1");
  const std::size_t step = spec.k - 1;
  std::vector<VertexSet> edges;
  for (std::size_t j = 0; j < spec.length; ++j) {
    VertexSet e(spec.k);
    std::iota(e.begin(), e.end(), static_cast<Vertex>(j * step));
    edges.push_back(std::move(e));
  }
  return Hypergraph(pattern_vertices(spec, spec.length * step + 1), spec.k, std::move(edges));
}

Hypergraph loose_cycle(const GenSpec& spec) {
  if (spec.k < 2) throw Error(ErrorKind::invalid_argument, "uniformity must be at least 2");
  if (spec.length < 3) throw Error(ErrorKind::invalid_argument, "loose cycle needs length >= 3");
  const std::size_t step = spec.k - 1;
  const std::size_t m = spec.length * step;
  std::vector<VertexSet> edges;
  for (std::size_t j = 0; j < spec.length; ++j) {
    VertexSet e(spec.k);
    for (std::size_t t = 0; t < spec.k; ++t) e[t] = static_cast<Vertex>((j * step + t) % m);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  return Hypergraph(pattern_vertices(spec, m), spec.k, std::move(edges));
}

Hypergraph matching(const GenSpec& spec) {
  if (spec.k < 2) throw Error(ErrorKind::invalid_argument, "uniformity must be at least 2");
  if (spec.length < 1) throw Error(ErrorKind::invalid_argument, "matching needs at least one edge");
  std::vector<VertexSet> edges;
  for (std::size_t j = 0; j < spec.length; ++j) {
    VertexSet e(spec.k);
    std::iota(e.begin(), e.end(), static_cast<Vertex>(j * spec.k));
    edges.push_back(std::move(e));
  }
  return Hypergraph(pattern_vertices(spec, spec.length * spec.k), spec.k, std::move(edges));
}

Hypergraph planted_bad(const GenSpec& spec) {
  if (!(spec.boost > 0.0)) throw Error(ErrorKind::invalid_argument, "boost must be positive");
  GenSpec base = spec;
  base.kind = GenKind::binomial;
  std::vector<VertexSet> edges = binomial_edges(base);

  VertexSet target = spec.target;
  if (target.empty()) {
    target.resize(spec.k - 1);
    std::iota(target.begin(), target.end(), 0u);
  }
  if (target.size() != spec.k - 1) throw Error(ErrorKind::invalid_argument, "planted target must be a (k-1)-set");
  target = canonical_set(target, spec.n);

  std::vector<char> excluded(spec.n, 0);
  for (Vertex v : target) excluded[v] = 1;
  std::size_t have = 0;
  for (const auto& e : edges) {
    if (std::includes(e.begin(), e.end(), target.begin(), target.end())) {
      for (Vertex v : e)
        if (!excluded[v]) excluded[v] = 2, ++have;
    }
  }
  const double room = static_cast<double>(spec.n - target.size());
  const double wanted = std::min(room, std::round(spec.boost * static_cast<double>(spec.n) * spec.p));
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < spec.n; ++v)
    if (!excluded[v]) pool.push_back(v);
  CounterRng rng(spec.seed, kPlantStream);
  // Hand-rolled Fisher-Yates: std::shuffle's draw pattern is library-specific.
  for (std::size_t j = pool.size(); j > 1; --j) std::swap(pool[j - 1], pool[rng.below(j)]);
  for (Vertex v : pool) {
    if (static_cast<double>(have) >= wanted) break;
    VertexSet e = target;
    e.insert(std::upper_bound(e.begin(), e.end(), v), v);
    edges.push_back(std::move(e));
    ++have;
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph(spec.n, spec.k, std::move(edges));
}

}  // namespace

std::string to_string(GenKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return std::string(name);
  return "unknown";
}

GenKind parse_gen_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw Error(ErrorKind::invalid_argument, "unknown generator kind '" + std::string(name) + "'");
}

std::uint64_t fixed_edge_target(std::size_t n, std::size_t k, double p) {
  require_probability(p);
  // The product is taken in double so that decimal inputs such as 0.1·45
  // land on the tie the user wrote and round to even.
  return static_cast<std::uint64_t>(std::nearbyint(p * static_cast<double>(binomial(n, k))));
}

Hypergraph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::binomial:
      return Hypergraph(spec.n, spec.k, binomial_edges(spec));
    case GenKind::fixed_edges:
      return Hypergraph(spec.n, spec.k, fixed_edges(spec));
    case GenKind::complete:
      return Hypergraph(spec.n, spec.k, complete_edges(spec));
    case GenKind::loose_path:
      return loose_path(spec);
    case GenKind::loose_cycle:
      return loose_cycle(spec);
    case GenKind::matching:
      return matching(spec);
    case GenKind::planted_bad:
      return planted_bad(spec);
  }
  throw Error(ErrorKind::invalid_argument, "unknown generator kind");
}

namespace {

CatalogEntry make_entry(std::string name, GenKind kind, std::size_t k, std::size_t length) {
  GenSpec spec;
  spec.kind = kind;
  spec.k = k;
  spec.length = length;
  Hypergraph h = generate(spec);
  StructureProfile prof = profile(h);
  if (!prof.linear || !prof.connector_free || h.vertex_count() < 4) {
    throw std::logic_error("catalog pattern " + name + " violates its hypotheses");
  }
  return {std::move(name), std::move(h), std::move(prof)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(make_entry("k2-path4", GenKind::loose_path, 2, 3));
  out.push_back(make_entry("k2-path5", GenKind::loose_path, 2, 4));
  out.push_back(make_entry("k2-cycle4", GenKind::loose_cycle, 2, 4));
  out.push_back(make_entry("k2-cycle5", GenKind::loose_cycle, 2, 5));
  out.push_back(make_entry("k2-matching2", GenKind::matching, 2, 2));
  out.push_back(make_entry("k3-loose-path2", GenKind::loose_path, 3, 2));
  out.push_back(make_entry("k3-loose-path3", GenKind::loose_path, 3, 3));
  out.push_back(make_entry("k3-loose-cycle3", GenKind::loose_cycle, 3, 3));
  out.push_back(make_entry("k3-matching2", GenKind::matching, 3, 2));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& pattern_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_pattern(std::string_view name) {
  for (const auto& entry : pattern_catalog())
    if (entry.name == name) return entry;
  throw Error(ErrorKind::invalid_argument, "unknown catalog pattern '" + std::string(name) + "'");
}

}  // namespace hypercount
