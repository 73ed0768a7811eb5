#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercount/combinatorics.hpp"

namespace hypercount {

using EdgeId = std::uint32_t;

/// A strictly increasing list of vertices.
using VertexSet = std::vector<Vertex>;

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept sorted internally and the edge list is in lexicographic
/// order, so two hypergraphs with the same edge set compare equal and
/// serialize identically. Every query is const and safe to call from many
/// threads.
class Hypergraph {
 public:
  /// Validates and canonicalizes. Throws Error with kind arity_mismatch,
  /// vertex_out_of_range or duplicate_edge.
  Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges);

  static Hypergraph empty(std::size_t n, std::size_t k) { return Hypergraph(n, k, {}); }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t uniformity() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }

  std::span<const Vertex> edge(EdgeId e) const noexcept {
    return {flat_.data() + static_cast<std::size_t>(e) * k_, k_};
  }
  std::span<const EdgeId> incident(Vertex v) const noexcept { return incidence_[v]; }
  std::size_t degree(Vertex v) const noexcept { return incidence_[v].size(); }

  /// `sorted` must be strictly increasing; any length is accepted and only a
  /// k-element set can match.
  bool has_edge(std::span<const Vertex> sorted) const noexcept;

  std::vector<VertexSet> edges() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Vertex> flat_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// An unordered family {S_1, ..., S_r} of distinct i-sets, stored sorted.
class SubsetFamily {
 public:
  /// Throws Error(invalid_argument) on empty input, mixed set sizes,
  /// repeated vertices inside a set or repeated sets.
  explicit SubsetFamily(std::vector<VertexSet> sets);

  std::size_t set_size() const noexcept { return sets_.front().size(); }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<VertexSet> sets_;
};

struct Density {
  std::uint64_t edges = 0;  // |E|
  std::uint64_t total = 1;  // C(n, k)
  std::uint64_t num = 0;    // reduced |E| / C(n, k)
  std::uint64_t den = 1;
  double value = 0.0;
};

/// N_G(S): every (k-|S|)-set T with S ∪ T an edge, sorted. Throws
/// size_out_of_range unless 1 <= |S| <= k-1, vertex_out_of_range on bad ids,
/// invalid_argument on repeated vertices.
std::vector<VertexSet> neighborhood(const Hypergraph& g, std::span<const Vertex> s);

/// Intersection of the neighborhoods of every set in the family.
std::vector<VertexSet> joint_neighborhood(const Hypergraph& g, const SubsetFamily& family);

/// p = |E| / C(n,k). Throws domain if n < k.
Density density(const Hypergraph& g);

bool is_stable(const Hypergraph& h, std::span<const Vertex> vertices);
bool is_linear(const Hypergraph& h);

/// Canonical text format: "n k m" header, then one edge per line; lines whose
/// first non-blank character is '#' are comments.
Hypergraph read_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& g);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& g, const std::string& path);

/// Sorts and validates a vertex set against n. Throws like neighborhood().
VertexSet canonical_set(std::span<const Vertex> s, std::size_t n);

}  // namespace hypercount
