#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypercount/hypergraph.hpp"
#include "hypercount/structure.hpp"

namespace hypercount {

/// Pins pattern[j] to host[j]: only embeddings f with f(W_j) = X_j count.
struct PinSpec {
  std::vector<Vertex> pattern;  // W, distinct vertices of H
  std::vector<Vertex> host;     // X, distinct vertices of G
};

/// Induced splits are computed only for patterns up to this many vertices.
inline constexpr std::size_t kInducedSplitMaxVertices = 12;

struct CountOptions {
  bool induced_split = false;
  std::uint64_t node_budget = 1'000'000'000;
  std::size_t workers = 0;
};

struct CountReport {
  std::uint64_t total = 0;
  std::optional<std::uint64_t> induced;
  std::optional<std::uint64_t> non_induced;
  double expected = 0.0;                 // n^m p^{e(H)}
  std::optional<double> relative_error;  // |total - expected| / expected, absent if expected == 0
  std::uint64_t nodes = 0;               // search nodes visited
};

/// Exact |E(H, G, W, X)| by backtracking over a degenerate ordering that
/// starts with W. Returns 0 (not an error) when the pins cannot extend;
/// throws invalid_argument / vertex_out_of_range on malformed pins,
/// budget_exceeded when the search would exceed options.node_budget.
CountReport count_embeddings(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins = {},
                             const CountOptions& options = {});

/// Calls visit(image) for every embedding extending the pins, where image[v]
/// is the host vertex of pattern vertex v. Sequential, deterministic order.
void for_each_embedding(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins,
                        const std::function<void(std::span<const Vertex>)>& visit);

/// Upper estimate of the search-tree size used for budget refusal.
double estimate_search_nodes(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins = {});

enum class Induced { induced, non_induced };

/// Throws invalid_argument unless f is an embedding of H into G.
Induced classify_induced(const Hypergraph& h, const Hypergraph& g, std::span<const Vertex> f);

bool is_embedding(const Hypergraph& h, const Hypergraph& g, std::span<const Vertex> f);

/// Edges of H not contained in the vertex set of W.
std::size_t omega(const Hypergraph& h, std::span<const Vertex> w);

struct ExtensionCheck {
  std::uint64_t lhs = 0;  // |E(H, G, W, X)|
  double rhs = 0.0;       // C^{m-l} n^{m-l} p^{omega(H, W)}
  bool holds = false;
  std::size_t omega = 0;
};

/// Verifies the extension bound's hypotheses once for a (H, G, C) triple:
/// H linear and G in BDD(D_H, C, p) by an exact scan. Throws
/// Error(precondition) otherwise.
class ExtensionBoundChecker {
 public:
  ExtensionBoundChecker(const Hypergraph& h, const Hypergraph& g, double C, const CountOptions& options = {});

  /// Throws size_out_of_range when |W| > max(k, d_H).
  ExtensionCheck check(const PinSpec& pins) const;

  std::size_t max_prefix() const noexcept { return max_prefix_; }

 private:
  const Hypergraph& h_;
  const Hypergraph& g_;
  double C_;
  CountOptions options_;
  std::size_t max_prefix_;
  double p_;
};

ExtensionCheck check_extension_bound(const Hypergraph& h, const Hypergraph& g, const PinSpec& pins, double C);

/// Classification of a partial embedding f of H_{h-1} (the first h-1
/// vertices of an ordering) with respect to the next vertex v_h.
enum class CleanState {
  clean,
  polluted,
  not_applicable,  // v_h has no left edges; clean by convention
};

struct PartialEmbedding {
  std::vector<Vertex> assignment;  // assignment[j] = f(ordering[j]), j < h-1
};

/// `frontier` is the 1-based position h of v_h in the ordering, 1 < h <= m.
/// Requires H linear; throws invalid_argument if f does not embed H_{h-1}.
CleanState classify_clean(const Hypergraph& h, std::span<const Vertex> ordering, std::size_t frontier,
                          const Hypergraph& g, const PartialEmbedding& f, double delta);

struct CleanCounts {
  std::uint64_t total = 0;  // |E(H_{h-1}, G)|
  std::uint64_t clean = 0;
  std::uint64_t polluted = 0;
  std::uint64_t induced_clean = 0;
  std::size_t r = 0;         // left degree of v_h
  std::size_t edges = 0;     // e(H_{h-1})
  bool by_convention = false;  // r == 0
};

CleanCounts count_clean_polluted(const Hypergraph& h, std::span<const Vertex> ordering, std::size_t frontier,
                                 const Hypergraph& g, double delta);

/// δ·r!·((k-1)!)^r·C^{h-1-r(k-1)}·n^{h-1}·p^{e(H_{h-1})}.
double pollution_bound(double delta, std::size_t r, std::size_t k, double C, std::size_t frontier,
                       std::size_t n, double p, std::size_t edges_before);

/// k!·C(m,k)·C^{m-k+1}·n^m·p^{e(H)+1}.
double non_induced_bound(std::size_t k, std::size_t m, double C, std::size_t n, double p, std::size_t edges);

}  // namespace hypercount
