#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hypercount/hypergraph.hpp"

namespace hypercount::detail {

/// Every i-set of [n], indexed by colex rank, with its neighborhood stored
/// as a sorted list of colex ranks of the completing (k-i)-sets.
class SetIndex {
 public:
  SetIndex(const Hypergraph& g, std::size_t i);

  std::uint64_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const std::uint64_t> links(std::uint64_t set) const noexcept {
    return {data_.data() + offsets_[set], offsets_[set + 1] - offsets_[set]};
  }
  std::size_t set_size() const noexcept { return i_; }

 private:
  std::size_t i_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint64_t> data_;
};

struct FamilyHit {
  std::vector<std::uint32_t> members;  // increasing set indices
  std::uint64_t count = 0;
};

/// Running totals for one family size r.
struct ScanTally {
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  std::uint64_t min_count = UINT64_MAX;
  std::uint64_t max_count = 0;
  long double count_sum = 0;
  std::vector<FamilyHit> hits;  // bad families, in enumeration order, capped

  void merge(ScanTally&& other, std::size_t cap);
};

struct ScanRule {
  /// Decides whether a family with the given joint-neighborhood size is bad.
  std::function<bool(std::uint64_t)> is_bad;
  /// Optional extra condition on the members; a family is bad only if
  /// is_bad(count) and accept(members). Disables bulk handling of empty
  /// intersections.
  std::function<bool(std::span<const std::uint32_t>)> accept;
  std::size_t hit_cap = 16;
};

/// Exhaustive scan over all C(N, r) families of distinct sets.
ScanTally scan_exact(const SetIndex& index, std::size_t r, const ScanRule& rule, std::size_t workers);

/// Scan over `samples` families drawn uniformly (with replacement) among
/// families of r distinct sets, using stream (seed, r).
ScanTally scan_sampled(const SetIndex& index, std::size_t r, const ScanRule& rule, std::uint64_t samples,
                       std::uint64_t seed, std::size_t workers);

/// Size of the intersection of the neighborhoods of the given sets.
std::uint64_t joint_count(const SetIndex& index, std::span<const std::uint32_t> members);

}  // namespace hypercount::detail
