#include "family_scan.hpp"

#include <algorithm>
#include <numeric>

#include "hypercount/error.hpp"
#include "hypercount/parallel.hpp"
#include "hypercount/rng.hpp"

namespace hypercount::detail {

namespace {

// Calls fn(subset, complement) for every i-subset of the sorted edge.
template <class Fn>
void for_each_split(std::span<const Vertex> edge, std::size_t i, Fn&& fn) {
  const std::size_t k = edge.size();
  std::vector<std::uint32_t> pos(i);
  std::iota(pos.begin(), pos.end(), 0u);
  VertexSet sub(i), rest(k - i);
  do {
    std::size_t a = 0, b = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (a < i && pos[a] == t) sub[a++] = edge[t]; else rest[b++] = edge[t];
    }
    fn(sub, rest);
  } while (next_combination(pos, static_cast<std::uint32_t>(k)));
}

constexpr std::uint64_t kMaxChunks = 1024;
constexpr std::uint64_t kSampleChunk = 4096;

class ExactWalker {
 public:
  ExactWalker(const SetIndex& index, std::size_t r, const ScanRule& rule)
      : index_(index), r_(r), rule_(rule), members_(r), buffers_(r), bulk_ok_(!rule.accept) {}

  void run_from(std::uint32_t first) {
    members_[0] = first;
    const auto links = index_.links(first);
    buffers_[0].assign(links.begin(), links.end());
    after_choice(0, first);
  }

  ScanTally take() { return std::move(tally_); }

 private:
  void after_choice(std::size_t depth, std::uint32_t chosen) {
    if (depth + 1 == r_) {
      visit(buffers_[depth].size());
      return;
    }
    if (buffers_[depth].empty() && bulk_ok_) {
      bulk_empty(depth, chosen);
      return;
    }
    descend(depth + 1, chosen + 1);
  }

  void descend(std::size_t depth, std::uint32_t start) {
    const std::uint64_t n = index_.size();
    const std::uint64_t last = n - (r_ - depth);
    for (std::uint64_t a = start; a <= last; ++a) {
      members_[depth] = static_cast<std::uint32_t>(a);
      auto& out = buffers_[depth];
      out.clear();
      const auto& prev = buffers_[depth - 1];
      const auto links = index_.links(a);
      std::set_intersection(prev.begin(), prev.end(), links.begin(), links.end(), std::back_inserter(out));
      after_choice(depth, static_cast<std::uint32_t>(a));
    }
  }

  void visit(std::uint64_t count) {
    ++tally_.checked;
    tally_.min_count = std::min(tally_.min_count, count);
    tally_.max_count = std::max(tally_.max_count, count);
    tally_.count_sum += count;
    if (!rule_.is_bad(count)) return;
    if (rule_.accept && !rule_.accept(members_)) return;
    ++tally_.bad;
    if (tally_.hits.size() < rule_.hit_cap) tally_.hits.push_back({members_, count});
  }

  // Every completion of members_[0..depth] has an empty joint neighborhood.
  void bulk_empty(std::size_t depth, std::uint32_t chosen) {
    const std::uint64_t n = index_.size();
    const std::size_t free_slots = r_ - depth - 1;
    const std::uint64_t block = binomial(n - chosen - 1, free_slots);
    if (block == 0) return;
    tally_.checked += block;
    tally_.min_count = 0;
    if (!rule_.is_bad(0)) return;
    tally_.bad += block;
    if (tally_.hits.size() >= rule_.hit_cap) return;
    std::vector<std::uint32_t> tail(free_slots);
    std::iota(tail.begin(), tail.end(), 0u);
    const auto range = static_cast<std::uint32_t>(n - chosen - 1);
    do {
      FamilyHit hit{members_, 0};
      for (std::size_t t = 0; t < free_slots; ++t) hit.members[depth + 1 + t] = chosen + 1 + tail[t];
      tally_.hits.push_back(std::move(hit));
    } while (tally_.hits.size() < rule_.hit_cap && next_combination(tail, range));
  }

  const SetIndex& index_;
  std::size_t r_;
  const ScanRule& rule_;
  std::vector<std::uint32_t> members_;
  std::vector<std::vector<std::uint64_t>> buffers_;
  bool bulk_ok_;
  ScanTally tally_;
};

}  // namespace

SetIndex::SetIndex(const Hypergraph& g, std::size_t i) : i_(i) {
  const std::uint64_t count = binomial(g.vertex_count(), i);
  if (count >= UINT32_MAX) {
    throw Error(ErrorKind::infeasible, "too many " + std::to_string(i) + "-sets to index");
  }
  offsets_.assign(count + 1, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for_each_split(g.edge(e), i, [&](const VertexSet& sub, const VertexSet&) { ++offsets_[colex_rank(sub) + 1]; });
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  data_.resize(offsets_.back());
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for_each_split(g.edge(e), i, [&](const VertexSet& sub, const VertexSet& rest) {
      data_[fill[colex_rank(sub)]++] = colex_rank(rest);
    });
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    std::sort(data_.begin() + offsets_[s], data_.begin() + offsets_[s + 1]);
  }
}

void ScanTally::merge(ScanTally&& other, std::size_t cap) {
  checked += other.checked;
  bad += other.bad;
  min_count = std::min(min_count, other.min_count);
  max_count = std::max(max_count, other.max_count);
  count_sum += other.count_sum;
  for (auto& h : other.hits) {
    if (hits.size() >= cap) break;
    hits.push_back(std::move(h));
  }
}

std::uint64_t joint_count(const SetIndex& index, std::span<const std::uint32_t> members) {
  const auto first = index.links(members.front());
  std::vector<std::uint64_t> acc(first.begin(), first.end()), next;
  for (std::size_t j = 1; j < members.size() && !acc.empty(); ++j) {
    const auto links = index.links(members[j]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), links.begin(), links.end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc.size();
}

ScanTally scan_exact(const SetIndex& index, std::size_t r, const ScanRule& rule, std::size_t workers) {
  const std::uint64_t n = index.size();
  if (r == 0 || n < r) return {};
  const std::uint64_t firsts = n - r + 1;
  const std::uint64_t chunks = std::min(firsts, kMaxChunks);
  std::vector<ScanTally> parts(chunks);
  parallel_for(chunks, workers, [&](std::size_t t) {
    const std::uint64_t lo = firsts * t / chunks;
    const std::uint64_t hi = firsts * (t + 1) / chunks;
    ExactWalker walker(index, r, rule);
    for (std::uint64_t a = lo; a < hi; ++a) walker.run_from(static_cast<std::uint32_t>(a));
    parts[t] = walker.take();
  });
  ScanTally total;
  for (auto& p : parts) total.merge(std::move(p), rule.hit_cap);
  return total;
}

ScanTally scan_sampled(const SetIndex& index, std::size_t r, const ScanRule& rule, std::uint64_t samples,
                       std::uint64_t seed, std::size_t workers) {
  const std::uint64_t n = index.size();
  if (r == 0 || n < r || samples == 0) return {};
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<ScanTally> parts(chunks);
  parallel_for(chunks, workers, [&](std::size_t t) {
    ScanTally tally;
    std::vector<std::uint32_t> members(r);
    const std::uint64_t hi = std::min(samples, (t + 1) * kSampleChunk);
    for (std::uint64_t s = t * kSampleChunk; s < hi; ++s) {
      CounterRng rng(seed, r, s);
      do {
        for (auto& m : members) m = static_cast<std::uint32_t>(rng.below(n));
        std::sort(members.begin(), members.end());
      } while (std::adjacent_find(members.begin(), members.end()) != members.end());
      const std::uint64_t count = joint_count(index, members);
      ++tally.checked;
      tally.min_count = std::min(tally.min_count, count);
      tally.max_count = std::max(tally.max_count, count);
      tally.count_sum += count;
      if (!rule.is_bad(count)) continue;
      if (rule.accept && !rule.accept(members)) continue;
      ++tally.bad;
      if (tally.hits.size() < rule.hit_cap) tally.hits.push_back({members, count});
    }
    parts[t] = std::move(tally);
  });
  ScanTally total;
  for (auto& p : parts) total.merge(std::move(p), rule.hit_cap);
  return total;
}

}  // namespace hypercount::detail
