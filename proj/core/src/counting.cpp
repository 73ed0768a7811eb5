#include "hypercount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hypercount/error.hpp"
#include "hypercount/parallel.hpp"
#include "hypercount/properties.hpp"

namespace hypercount {

namespace {

/// Host-side lookup from a sorted (k-1)-set to the sorted list of vertices
/// completing it to an edge.
class LinkIndex {
 public:
  explicit LinkIndex(const Hypergraph& g) : k_(g.uniformity()) {
    const std::size_t n = g.vertex_count();
    choose_.assign(k_, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t j = 1; j < k_; ++j) {
      for (std::size_t a = 0; a <= n; ++a) choose_[j][a] = binomial_saturating(a, j);
    }
    const std::uint64_t keys = binomial_saturating(n, k_ - 1);
    dense_ = keys <= kDenseLimit;

    std::vector<std::pair<std::uint64_t, Vertex>> pairs;
    pairs.reserve(g.edge_count() * k_);
    VertexSet key(k_ - 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto edge = g.edge(e);
      for (std::size_t skip = 0; skip < k_; ++skip) {
        std::size_t t = 0;
        for (std::size_t j = 0; j < k_; ++j)
          if (j != skip) key[t++] = edge[j];
        pairs.emplace_back(rank(key), edge[skip]);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    data_.reserve(pairs.size());
    if (dense_) {
      offsets_.assign(keys + 1, 0);
      for (const auto& [r, v] : pairs) ++offsets_[r + 1];
      std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
      for (const auto& pr : pairs) data_.push_back(pr.second);
    } else {
      for (std::size_t a = 0; a < pairs.size();) {
        std::size_t b = a;
        while (b < pairs.size() && pairs[b].first == pairs[a].first) data_.push_back(pairs[b++].second);
        sparse_.emplace(pairs[a].first, std::make_pair(a, b - a));
        a = b;
      }
    }
  }

  std::uint64_t rank(std::span<const Vertex> sorted_key) const noexcept {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < sorted_key.size(); ++j) r += choose_[j + 1][sorted_key[j]];
    return r;
  }

  std::span<const Vertex> links(std::span<const Vertex> sorted_key) const noexcept {
    const std::uint64_t r = rank(sorted_key);
    if (dense_) return {data_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    const auto it = sparse_.find(r);
    if (it == sparse_.end()) return {};
    return {data_.data() + it->second.first, it->second.second};
  }

 private:
  static constexpr std::uint64_t kDenseLimit = 1u << 22;
  std::size_t k_;
  bool dense_ = true;
  std::vector<std::vector<std::uint64_t>> choose_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> data_;
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> sparse_;
};

/// Search order and per-position constraints, all in terms of positions.
struct Plan {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t pinned = 0;             // first `pinned` positions are fixed
  std::vector<Vertex> order;          // pattern vertex at each position
  std::vector<Vertex> pin_images;     // host vertex for each pinned position
  std::vector<std::vector<std::size_t>> back;      // groups of k-1 earlier positions
  std::vector<std::vector<std::size_t>> non_edges; // groups of k-1 earlier positions
};

void validate_pins(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins) {
  if (h.uniformity() != g.uniformity()) {
    throw Error(ErrorKind::invalid_argument, "pattern and host must have the same uniformity");
  }
  if (pins.pattern.size() != pins.host.size()) {
    throw Error(ErrorKind::invalid_argument, "pin sequences must have equal length");
  }
  canonical_set(pins.pattern, h.vertex_count());
  canonical_set(pins.host, g.vertex_count());
}

std::vector<Vertex> search_order(const Hypergraph& h, std::span<const Vertex> prefix) {
  const std::size_t k = h.uniformity();
  const Degeneracy base = degeneracy(h);
  if (prefix.size() <= std::max(k, base.value) && is_linear(h)) {
    return prefix_degenerate_ordering(h, prefix).ordering.sequence;
  }
  return with_prefix(prefix, base.ordering.sequence);
}

Plan make_plan(const Hypergraph& h, const PinSpec& pins, bool induced) {
  Plan plan;
  plan.m = h.vertex_count();
  plan.k = h.uniformity();
  plan.pinned = pins.pattern.size();
  plan.order = search_order(h, pins.pattern);
  plan.pin_images = pins.host;
  std::vector<std::size_t> pos(plan.m);
  for (std::size_t j = 0; j < plan.m; ++j) pos[plan.order[j]] = j;
  plan.back.assign(plan.m, {});
  plan.non_edges.assign(plan.m, {});
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::vector<std::size_t> ps;
    for (Vertex v : h.edge(e)) ps.push_back(pos[v]);
    std::sort(ps.begin(), ps.end());
    auto& group = plan.back[ps.back()];
    group.insert(group.end(), ps.begin(), ps.end() - 1);
  }
  if (induced && plan.m >= plan.k) {
    std::vector<std::uint32_t> combo(plan.k);
    std::iota(combo.begin(), combo.end(), 0u);
    VertexSet set(plan.k);
    do {
      for (std::size_t j = 0; j < plan.k; ++j) set[j] = combo[j];
      if (h.has_edge(set)) continue;
      std::vector<std::size_t> ps;
      for (Vertex v : set) ps.push_back(pos[v]);
      std::sort(ps.begin(), ps.end());
      auto& group = plan.non_edges[ps.back()];
      group.insert(group.end(), ps.begin(), ps.end() - 1);
    } while (next_combination(combo, static_cast<std::uint32_t>(plan.m)));
  }
  return plan;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_) {
      throw Error(ErrorKind::budget_exceeded, "search exceeded the node budget of " + std::to_string(limit_));
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t induced = 0;
  std::uint64_t non_induced = 0;
  std::uint64_t nodes = 0;
};

class Searcher {
 public:
  using Visitor = std::function<void(std::span<const Vertex>)>;

  Searcher(const Plan& plan, const Hypergraph& g, const LinkIndex& links, bool induced, NodeBudget* budget,
           const Visitor* visit)
      : plan_(plan),
        g_(g),
        links_(links),
        induced_(induced),
        budget_(budget),
        visit_(visit),
        image_(plan.m),
        used_(g.vertex_count(), 0),
        buffers_(plan.m + 1),
        key_(plan.k) {}

  /// Fixes the pinned positions; false if they violate an edge of H[W].
  bool place_pins(bool& non_induced) {
    non_induced = false;
    for (std::size_t d = 0; d < plan_.pinned; ++d) {
      const Vertex x = plan_.pin_images[d];
      if (!edges_ok(d, x)) return false;
      if (induced_ && hits_non_edge(d, x)) non_induced = true;
      assign(d, x);
    }
    return true;
  }

  void candidates(std::size_t depth, std::vector<Vertex>& out) {
    out.clear();
    const auto& groups = plan_.back[depth];
    const std::size_t width = plan_.k - 1;
    if (groups.empty()) {
      for (Vertex x = 0; x < g_.vertex_count(); ++x)
        if (!used_[x]) out.push_back(x);
      return;
    }
    spans_.clear();
    for (std::size_t a = 0; a < groups.size(); a += width) {
      for (std::size_t j = 0; j < width; ++j) key_[j] = image_[groups[a + j]];
      std::sort(key_.begin(), key_.begin() + width);
      const auto span = links_.links({key_.data(), width});
      if (span.empty()) return;
      spans_.push_back(span);
    }
    std::sort(spans_.begin(), spans_.end(), [](auto a, auto b) { return a.size() < b.size(); });
    for (Vertex x : spans_.front())
      if (!used_[x]) out.push_back(x);
    for (std::size_t s = 1; s < spans_.size() && !out.empty(); ++s) {
      const auto other = spans_[s];
      std::size_t write = 0, j = 0;
      for (Vertex x : out) {
        while (j < other.size() && other[j] < x) ++j;
        if (j < other.size() && other[j] == x) out[write++] = x;
      }
      out.resize(write);
    }
  }

  void run(std::size_t depth, bool non_induced) {
    if (depth == plan_.m) {
      leaf(non_induced);
      return;
    }
    charge();
    auto& cands = buffers_[depth];
    candidates(depth, cands);
    if (depth + 1 == plan_.m && !induced_ && !visit_) {
      tally_.total += cands.size();
      return;
    }
    for (Vertex x : cands) descend(depth, x, non_induced);
  }

  void descend(std::size_t depth, Vertex x, bool non_induced) {
    const bool now = non_induced || (induced_ && hits_non_edge(depth, x));
    assign(depth, x);
    run(depth + 1, now);
    unassign(depth);
  }

  Tally finish() {
    flush();
    return tally_;
  }

 private:
  bool edges_ok(std::size_t depth, Vertex x) {
    if (used_[x]) return false;
    const auto& groups = plan_.back[depth];
    const std::size_t width = plan_.k - 1;
    for (std::size_t a = 0; a < groups.size(); a += width) {
      for (std::size_t j = 0; j < width; ++j) key_[j] = image_[groups[a + j]];
      key_[width] = x;
      std::sort(key_.begin(), key_.end());
      if (!g_.has_edge(key_)) return false;
    }
    return true;
  }

  bool hits_non_edge(std::size_t depth, Vertex x) {
    const auto& groups = plan_.non_edges[depth];
    const std::size_t width = plan_.k - 1;
    for (std::size_t a = 0; a < groups.size(); a += width) {
      for (std::size_t j = 0; j < width; ++j) key_[j] = image_[groups[a + j]];
      key_[width] = x;
      std::sort(key_.begin(), key_.end());
      if (g_.has_edge(key_)) return true;
    }
    return false;
  }

  void assign(std::size_t depth, Vertex x) {
    image_[depth] = x;
    used_[x] = 1;
  }
  void unassign(std::size_t depth) { used_[image_[depth]] = 0; }

  void leaf(bool non_induced) {
    ++tally_.total;
    if (induced_) ++(non_induced ? tally_.non_induced : tally_.induced);
    if (visit_) {
      by_vertex_.resize(plan_.m);
      for (std::size_t j = 0; j < plan_.m; ++j) by_vertex_[plan_.order[j]] = image_[j];
      (*visit_)(by_vertex_);
    }
  }

  void charge() {
    ++tally_.nodes;
    if (++pending_ >= 4096) flush();
  }
  void flush() {
    if (budget_ && pending_) budget_->charge(pending_);
    pending_ = 0;
  }

  const Plan& plan_;
  const Hypergraph& g_;
  const LinkIndex& links_;
  bool induced_;
  NodeBudget* budget_;
  const Visitor* visit_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> buffers_;
  std::vector<std::span<const Vertex>> spans_;
  VertexSet key_;
  std::vector<Vertex> by_vertex_;
  Tally tally_;
  std::uint64_t pending_ = 0;
};

long double expected_count(const Hypergraph& h, const Hypergraph& g) {
  const Density d = density(g);
  return std::pow(static_cast<long double>(g.vertex_count()), static_cast<long double>(h.vertex_count())) *
         ratio_power(d.edges, d.total, static_cast<unsigned>(h.edge_count()));
}

}  // namespace

double estimate_search_nodes(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins) {
  validate_pins(h, g, pins);
  const Plan plan = make_plan(h, pins, false);
  const double n = static_cast<double>(g.vertex_count());
  const double p = g.vertex_count() >= g.uniformity() ? density(g).value : 0.0;
  double level = 1.0, total = 0.0;
  for (std::size_t d = plan.pinned; d < plan.m; ++d) {
    total += level;
    const std::size_t r = plan.back[d].size() / (plan.k - 1);
    const double branch = r == 0 ? n - static_cast<double>(d) : std::min(n, n * std::pow(p, static_cast<double>(r)));
    level *= std::max(branch, 1.0);
  }
  return total;
}

CountReport count_embeddings(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins,
                             const CountOptions& options) {
  validate_pins(h, g, pins);
  const bool induced = options.induced_split && h.vertex_count() <= kInducedSplitMaxVertices;
  if (const double est = estimate_search_nodes(h, g, pins); est > static_cast<double>(options.node_budget)) {
    throw Error(ErrorKind::budget_exceeded, "estimated search of " + std::to_string(est) +
                                                " nodes exceeds the node budget");
  }
  const Plan plan = make_plan(h, pins, induced);
  const LinkIndex links(g);
  NodeBudget budget(options.node_budget);

  CountReport report;
  if (g.vertex_count() >= g.uniformity()) {
    const long double expected = expected_count(h, g);
    report.expected = static_cast<double>(expected);
    if (expected > 0) report.relative_error = static_cast<double>(0.0L);  // filled below
  }

  Tally sum;
  Searcher root(plan, g, links, induced, &budget, nullptr);
  bool pinned_non_induced = false;
  if (root.place_pins(pinned_non_induced)) {
    if (plan.pinned == plan.m) {
      sum.total = 1;
      if (induced) ++(pinned_non_induced ? sum.non_induced : sum.induced);
    } else {
      // Split the tree at the first free level; each candidate is a task.
      std::vector<Vertex> firsts;
      root.candidates(plan.pinned, firsts);
      if (plan.pinned + 1 == plan.m && !induced) {
        sum.total = firsts.size();
        sum.nodes = 1;
      } else {
        std::vector<Tally> parts(firsts.size());
        parallel_for(firsts.size(), resolve_workers(options.workers), [&](std::size_t t) {
          Searcher worker(plan, g, links, induced, &budget, nullptr);
          bool ni = false;
          worker.place_pins(ni);
          worker.descend(plan.pinned, firsts[t], ni);
          parts[t] = worker.finish();
        });
        sum.nodes = 1;
        for (const auto& p : parts) {
          sum.total += p.total;
          sum.induced += p.induced;
          sum.non_induced += p.non_induced;
          sum.nodes += p.nodes;
        }
      }
    }
  }
  report.total = sum.total;
  report.nodes = sum.nodes;
  if (induced) {
    report.induced = sum.induced;
    report.non_induced = sum.non_induced;
  }
  if (report.relative_error) {
    const long double expected = expected_count(h, g);
    report.relative_error =
        static_cast<double>(std::fabs(static_cast<long double>(report.total) - expected) / expected);
  }
  return report;
}

void for_each_embedding(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins,
                        const std::function<void(std::span<const Vertex>)>& visit) {
  validate_pins(h, g, pins);
  const Plan plan = make_plan(h, pins, false);
  const LinkIndex links(g);
  Searcher searcher(plan, g, links, false, nullptr, &visit);
  bool ni = false;
  if (!searcher.place_pins(ni)) return;
  searcher.run(plan.pinned, false);
}

bool is_embedding(const Hypergraph& h, const Hypergraph& g, std::span<const Vertex> f) {
  if (f.size() != h.vertex_count() || h.uniformity() != g.uniformity()) return false;
  std::vector<char> hit(g.vertex_count(), 0);
  for (Vertex x : f) {
    if (x >= g.vertex_count() || hit[x]) return false;
    hit[x] = 1;
  }
  VertexSet image(h.uniformity());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t j = 0; j < edge.size(); ++j) image[j] = f[edge[j]];
    std::sort(image.begin(), image.end());
    if (!g.has_edge(image)) return false;
  }
  return true;
}

Induced classify_induced(const Hypergraph& h, const Hypergraph& g, std::span<const Vertex> f) {
  if (!is_embedding(h, g, f)) throw Error(ErrorKind::invalid_argument, "mapping is not an embedding");
  const std::size_t m = h.vertex_count();
  const std::size_t k = h.uniformity();
  if (m < k) return Induced::induced;
  std::vector<std::uint32_t> combo(k);
  std::iota(combo.begin(), combo.end(), 0u);
  VertexSet set(k), image(k);
  do {
    for (std::size_t j = 0; j < k; ++j) set[j] = combo[j];
    if (h.has_edge(set)) continue;
    for (std::size_t j = 0; j < k; ++j) image[j] = f[set[j]];
    std::sort(image.begin(), image.end());
    if (g.has_edge(image)) return Induced::non_induced;
  } while (next_combination(combo, static_cast<std::uint32_t>(m)));
  return Induced::induced;
}

std::size_t omega(const Hypergraph& h, std::span<const Vertex> w) {
  const VertexSet set = canonical_set(w, h.vertex_count());
  std::vector<char> inside(h.vertex_count(), 0);
  for (Vertex v : set) inside[v] = 1;
  std::size_t outside = 0;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    if (!std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return inside[v] != 0; })) ++outside;
  }
  return outside;
}

ExtensionBoundChecker::ExtensionBoundChecker(const Hypergraph& h, const Hypergraph& g, double C,
                                             const CountOptions& options)
    : h_(h), g_(g), C_(C), options_(options) {
  if (h.uniformity() != g.uniformity()) {
    throw Error(ErrorKind::invalid_argument, "pattern and host must have the same uniformity");
  }
  if (!is_linear(h)) throw Error(ErrorKind::not_linear, "the extension bound needs a linear pattern");
  const StructureProfile prof = profile(h);
  max_prefix_ = std::max(h.uniformity(), prof.degeneracy);
  p_ = density(g).value;
  if (prof.cap >= 1) {
    BddParams params;
    params.d = prof.cap;
    params.C = C;
    params.scan.workers = options.workers;
    params.scan.witness_cap = 1;
    if (!check_bdd(g, params).holds) {
      throw Error(ErrorKind::precondition, "host fails BDD(D_H, C, p) with D_H=" + std::to_string(prof.cap));
    }
  } else if (!(C > 1.0)) {
    throw Error(ErrorKind::invalid_argument, "C must exceed 1");
  }
}

ExtensionCheck ExtensionBoundChecker::check(const PinSpec& pins) const {
  if (pins.pattern.size() > max_prefix_) {
    throw Error(ErrorKind::size_out_of_range, "pin length exceeds max(k, d_H)");
  }
  ExtensionCheck out;
  out.lhs = count_embeddings(h_, g_, pins, options_).total;
  out.omega = omega(h_, pins.pattern);
  const long double free = static_cast<long double>(h_.vertex_count() - pins.pattern.size());
  out.rhs = static_cast<double>(std::pow(static_cast<long double>(C_), free) *
                                std::pow(static_cast<long double>(g_.vertex_count()), free) *
                                std::pow(static_cast<long double>(p_), static_cast<long double>(out.omega)));
  out.holds = static_cast<double>(out.lhs) <= out.rhs;
  return out;
}

ExtensionCheck check_extension_bound(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins, double C) {
  return ExtensionBoundChecker(h, g, C).check(pins);
}

namespace {

struct Frontier {
  Vertex vertex = 0;
  std::vector<std::vector<std::size_t>> left_sets;  // positions of e \ {v_h}, per left edge
  std::vector<Vertex> prefix;                       // ordering[0 .. h-2]
};

Frontier frontier_of(const Hypergraph& h, std::span<const Vertex> ordering, std::size_t frontier) {
  const std::size_t m = h.vertex_count();
  left_degrees(h, ordering);  // validates the permutation
  if (frontier < 2 || frontier > m) throw Error(ErrorKind::invalid_argument, "frontier must satisfy 1 < h <= m");
  if (!is_linear(h)) throw Error(ErrorKind::not_linear, "clean/polluted classification needs a linear pattern");
  std::vector<std::size_t> pos(m);
  for (std::size_t j = 0; j < m; ++j) pos[ordering[j]] = j;
  Frontier f;
  f.vertex = ordering[frontier - 1];
  f.prefix.assign(ordering.begin(), ordering.begin() + static_cast<std::ptrdiff_t>(frontier - 1));
  for (EdgeId e : h.incident(f.vertex)) {
    std::vector<std::size_t> rest;
    bool left = true;
    for (Vertex u : h.edge(e)) {
      if (u == f.vertex) continue;
      if (pos[u] >= frontier - 1) {
        left = false;
        break;
      }
      rest.push_back(pos[u]);
    }
    if (left) f.left_sets.push_back(std::move(rest));
  }
  return f;
}

SubsetFamily image_family(const Frontier& f, std::span<const Vertex> by_position) {
  std::vector<VertexSet> sets;
  for (const auto& ps : f.left_sets) {
    VertexSet s;
    for (auto p : ps) s.push_back(by_position[p]);
    sets.push_back(std::move(s));
  }
  return SubsetFamily(std::move(sets));
}

}  // namespace

CleanState classify_clean(const Hypergraph& h, std::span<const Vertex> ordering, std::size_t frontier,
                          const Hypergraph& g, const PartialEmbedding& f, double delta) {
  const Frontier fr = frontier_of(h, ordering, frontier);
  if (f.assignment.size() != frontier - 1) {
    throw Error(ErrorKind::invalid_argument, "partial embedding must cover the first h-1 vertices");
  }
  const Hypergraph before = induced_relabeled(h, fr.prefix);
  if (!is_embedding(before, g, f.assignment)) {
    throw Error(ErrorKind::invalid_argument, "assignment does not embed H_{h-1}");
  }
  if (fr.left_sets.empty()) return CleanState::not_applicable;
  return is_bad_family(g, image_family(fr, f.assignment), delta, true) ? CleanState::polluted : CleanState::clean;
}

CleanCounts count_clean_polluted(const Hypergraph& h, std::span<const Vertex> ordering, std::size_t frontier,
                                 const Hypergraph& g, double delta) {
  const Frontier fr = frontier_of(h, ordering, frontier);
  const Hypergraph before = induced_relabeled(h, fr.prefix);
  CleanCounts out;
  out.r = fr.left_sets.size();
  out.edges = before.edge_count();
  out.by_convention = out.r == 0;
  std::map<std::vector<VertexSet>, bool> memo;
  for_each_embedding(before, g, {}, [&](std::span<const Vertex> image) {
    ++out.total;
    bool polluted = false;
    if (out.r > 0) {
      const SubsetFamily family = image_family(fr, image);
      const auto [it, fresh] = memo.try_emplace(family.sets(), false);
      if (fresh) it->second = is_bad_family(g, family, delta, true);
      polluted = it->second;
    }
    if (polluted) {
      ++out.polluted;
      return;
    }
    ++out.clean;
    if (classify_induced(before, g, image) == Induced::induced) ++out.induced_clean;
  });
  return out;
}

double pollution_bound(double delta, std::size_t r, std::size_t k, double C, std::size_t frontier, std::size_t n,
                       double p, std::size_t edges_before) {
  const long double exponent =
      static_cast<long double>(frontier) - 1.0L - static_cast<long double>(r) * static_cast<long double>(k - 1);
  const long double value = delta * factorial(static_cast<unsigned>(r)) *
                            std::pow(factorial(static_cast<unsigned>(k - 1)), static_cast<long double>(r)) *
                            std::pow(static_cast<long double>(C), exponent) *
                            std::pow(static_cast<long double>(n), static_cast<long double>(frontier - 1)) *
                            std::pow(static_cast<long double>(p), static_cast<long double>(edges_before));
  return static_cast<double>(value);
}

double non_induced_bound(std::size_t k, std::size_t m, double C, std::size_t n, double p, std::size_t edges) {
  const long double value = factorial(static_cast<unsigned>(k)) * static_cast<long double>(binomial(m, k)) *
                            std::pow(static_cast<long double>(C), static_cast<long double>(m - k + 1)) *
                            std::pow(static_cast<long double>(n), static_cast<long double>(m)) *
                            std::pow(static_cast<long double>(p), static_cast<long double>(edges + 1));
  return static_cast<double>(value);
}

}  // namespace hypercount
