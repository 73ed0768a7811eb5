#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercount/hypergraph.hpp"
#include "hypercount/structure.hpp"

namespace hypercount {

enum class GenKind { binomial, fixed_edges, complete, loose_path, loose_cycle, matching, planted_bad };

std::string to_string(GenKind kind);
/// Accepts the hyphenated names ("fixed-edges", "loose-path", ...).
GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::binomial;
  std::size_t n = 0;  // structured kinds: 0 means "just the pattern's vertices"
  std::size_t k = 2;
  double p = 0.0;                      // binomial, fixed-edges, planted-bad
  std::optional<std::uint64_t> edges;  // fixed-edges: overrides p
  std::size_t length = 0;              // loose-path, loose-cycle, matching
  std::uint64_t seed = 1;
  VertexSet target;    // planted-bad: (k-1)-set, default {0..k-2}
  double boost = 2.0;  // planted-bad: |N(target)| is raised to about boost·n·p
};

/// Deterministic for a fixed spec. Throws Error(infeasible) or
/// Error(invalid_argument) on impossible specs.
Hypergraph generate(const GenSpec& spec);

/// Edge count used by fixed-edges: p·C(n,k) rounded half to even.
std::uint64_t fixed_edge_target(std::size_t n, std::size_t k, double p);

struct CatalogEntry {
  std::string name;
  Hypergraph pattern;
  StructureProfile profile;
};

/// Built-in linear, connector-free patterns with at least 4 vertices.
const std::vector<CatalogEntry>& pattern_catalog();

/// Throws Error(invalid_argument) for an unknown name.
const CatalogEntry& catalog_pattern(std::string_view name);

}  // namespace hypercount
