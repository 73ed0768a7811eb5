#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypercount/hypergraph.hpp"

namespace hypercount {

/// A vertex ordering v_1..v_m together with its left degrees: the left
/// degree at position i counts the edges inside {v_1..v_i} that contain v_i.
struct Ordering {
  std::vector<Vertex> sequence;
  std::vector<std::size_t> left_degrees;
  std::size_t bound = 0;  // max(left_degrees) <= bound
};

struct StructureProfile {
  std::size_t degeneracy = 0;  // d_H
  std::size_t max_degree = 0;  // Δ(H)
  std::size_t cap = 0;         // D_H = min(k·d_H, Δ(H))
  bool linear = false;
  bool connector_free = false;
  /// Connector edges; only defined for linear hypergraphs.
  std::optional<std::vector<VertexSet>> connectors;
};

struct Degeneracy {
  std::size_t value = 0;
  Ordering ordering;  // bound == value
};

/// Greedy min-degree peeling, smallest id first among ties. The reversed
/// removal sequence is a value-degenerate ordering.
Degeneracy degeneracy(const Hypergraph& h);

std::size_t max_degree(const Hypergraph& h);

/// Edges e with an outside vertex v whose incident edges meet e in k
/// distinct vertices. Throws Error(not_linear) for non-linear input.
std::vector<VertexSet> connectors(const Hypergraph& h);

StructureProfile profile(const Hypergraph& h);

/// Left degrees of a full vertex ordering. Throws not_permutation.
std::vector<std::size_t> left_degrees(const Hypergraph& h, std::span<const Vertex> sequence);

/// Which branch of the prefix construction produced the ordering.
enum class PrefixCase {
  empty_prefix,  // W empty: the degenerate ordering itself
  max_degree,    // D_H = Δ(H): (W, L\W) works for any W
  dense,         // d_H >= 2: (W, L\W)
  promoted,      // d_H = 1: one overloaded vertex moved right after W
  unchanged,     // d_H = 1 and no vertex needed promotion
};

struct PrefixOrdering {
  Ordering ordering;  // bound == D_H
  PrefixCase used = PrefixCase::empty_prefix;
  std::optional<Vertex> promoted;
};

/// D_H-degenerate ordering that starts with the sequence W. Requires H
/// linear, W distinct and |W| <= max(k, d_H); throws not_linear,
/// invalid_argument, size_out_of_range or vertex_out_of_range.
PrefixOrdering prefix_degenerate_ordering(const Hypergraph& h, std::span<const Vertex> prefix);

/// (W, L \ W): the prefix followed by the remaining vertices of L in order.
std::vector<Vertex> with_prefix(std::span<const Vertex> prefix, std::span<const Vertex> order);

/// Sub-hypergraph induced by `vertices`, relabeled so vertices[j] becomes j.
Hypergraph induced_relabeled(const Hypergraph& h, std::span<const Vertex> vertices);

}  // namespace hypercount
