#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "hypercount/combinatorics.hpp"
#include "hypercount/error.hpp"
#include "hypercount/generators.hpp"
#include "oracles.hpp"

using namespace hypercount;

namespace {

GenSpec make(GenKind kind, std::size_t n, std::size_t k, double p = 0.0, std::uint64_t seed = 1) {
  GenSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.k = k;
  spec.p = p;
  spec.seed = seed;
  return spec;
}

ErrorKind kind_of(const GenSpec& spec) {
  try {
    generate(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::io;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("structured examples") {
  CHECK(generate(make(GenKind::complete, 4, 2)).edge_count() == 6);
  auto path = make(GenKind::loose_path, 0, 3);
  path.length = 2;
  CHECK(generate(path) == Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}}));
  path.n = 8;
  const auto padded = generate(path);
  CHECK(padded.vertex_count() == 8);
  CHECK(padded.edge_count() == 2);

  auto cycle = make(GenKind::loose_cycle, 0, 2);
  cycle.length = 5;
  const auto c5 = generate(cycle);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  auto matching = make(GenKind::matching, 0, 3);
  matching.length = 2;
  CHECK(generate(matching) == Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}}));
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {GenKind::binomial, GenKind::fixed_edges, GenKind::complete, GenKind::loose_path,
                    GenKind::loose_cycle, GenKind::matching, GenKind::planted_bad})
    CHECK(parse_gen_kind(to_string(kind)) == kind);
  CHECK(to_string(GenKind::fixed_edges) == "fixed-edges");
  CHECK_THROWS_AS(parse_gen_kind("erdos"), Error);
}

TEST_CASE("golden binomial instance") {
  const auto g = generate(make(GenKind::binomial, 20, 3, 0.1, 7));
  const std::string golden = slurp(std::string(HYPERCOUNT_TEST_DATA) + "/binomial_n20_k3_p0.1_seed7.hg");
  REQUIRE_FALSE(golden.empty());
  CHECK(write_hypergraph(g) == golden);
  const double mean = 1140 * 0.1;
  const double sigma = std::sqrt(1140 * 0.1 * 0.9);
  CHECK(std::fabs(static_cast<double>(g.edge_count()) - mean) <= 4 * sigma);
}

TEST_CASE("generation is deterministic and seed-sensitive") {
  for (auto kind : {GenKind::binomial, GenKind::fixed_edges, GenKind::planted_bad}) {
    const auto a = generate(make(kind, 15, 3, 0.2, 11));
    CHECK(a == generate(make(kind, 15, 3, 0.2, 11)));
    CHECK_FALSE(a == generate(make(kind, 15, 3, 0.2, 12)));
  }
}

TEST_CASE("fixed-edges hits the requested count") {
  CHECK(fixed_edge_target(10, 2, 0.5) == 22);   // 22.5 rounds to even
  CHECK(fixed_edge_target(10, 2, 0.1) == 4);    // 4.5 rounds to even
  CHECK(fixed_edge_target(20, 3, 0.1) == 114);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = generate(make(GenKind::fixed_edges, 12, 3, 0.3, seed));
    CHECK(g.edge_count() == fixed_edge_target(12, 3, 0.3));
  }
  auto exact = make(GenKind::fixed_edges, 9, 2, 0.0, 4);
  exact.edges = 36;
  CHECK(generate(exact).edge_count() == 36);
}

TEST_CASE("geometric skipping agrees with the expected edge count") {
  // C(200, 3) exceeds the coin-per-set limit, so this exercises the skip path.
  const double total = static_cast<double>(binomial(200, 3));
  const double p = 0.001;
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = generate(make(GenKind::binomial, 200, 3, p, seed));
    sum += static_cast<double>(g.edge_count());
  }
  const double mean = sum / 20.0;
  CHECK(std::fabs(mean - total * p) < 4.0 * std::sqrt(total * p / 20.0));
}

TEST_CASE("binomial edge counts pass a chi-square goodness-of-fit test") {
  const std::size_t n = 12, k = 3;
  const double p = 0.2;
  const auto sets = binomial(n, k);
  const boost::math::binomial_distribution<double> law(static_cast<double>(sets), p);
  const int runs = 200;
  std::vector<int> observed(sets + 1, 0);
  for (int s = 1; s <= runs; ++s) ++observed[generate(make(GenKind::binomial, n, k, p, s)).edge_count()];

  // Merge adjacent counts into bins with at least 10 expected hits each.
  std::vector<double> bin_expected;
  std::vector<double> bin_observed;
  double e_acc = 0.0, o_acc = 0.0;
  for (std::uint64_t x = 0; x <= sets; ++x) {
    e_acc += runs * boost::math::pdf(law, static_cast<double>(x));
    o_acc += observed[x];
    if (e_acc >= 10.0) {
      bin_expected.push_back(e_acc);
      bin_observed.push_back(o_acc);
      e_acc = o_acc = 0.0;
    }
  }
  bin_expected.back() += e_acc;
  bin_observed.back() += o_acc;
  REQUIRE(bin_expected.size() >= 5);
  double stat = 0.0;
  for (std::size_t b = 0; b < bin_expected.size(); ++b)
    stat += (bin_observed[b] - bin_expected[b]) * (bin_observed[b] - bin_expected[b]) / bin_expected[b];
  const boost::math::chi_squared dist(static_cast<double>(bin_expected.size() - 1));
  CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 1e-3);
}

TEST_CASE("catalog entries satisfy the counting hypotheses") {
  const auto& catalog = pattern_catalog();
  CHECK(catalog.size() >= 5);
  for (const auto& entry : catalog) {
    CAPTURE(entry.name);
    CHECK(entry.pattern.vertex_count() >= 4);
    CHECK(is_linear(entry.pattern));
    CHECK(oracle::linear(entry.pattern));
    CHECK(oracle::connectors(entry.pattern).empty());
    CHECK(entry.profile.connector_free);
    CHECK(entry.profile.degeneracy == oracle::degeneracy(entry.pattern));
    CHECK(&catalog_pattern(entry.name) == &entry);
  }
  const auto& path = catalog_pattern("k3-loose-path2");
  CHECK(path.pattern.vertex_count() == 5);
  CHECK(path.profile.cap == 2);
  CHECK(catalog_pattern("k2-path4").profile.cap == 2);
  CHECK(catalog_pattern("k2-cycle5").profile.cap == 2);
  CHECK_THROWS_AS(catalog_pattern("k2-triangle"), Error);
}

TEST_CASE("planted hosts inflate the target neighborhood") {
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto spec = make(GenKind::planted_bad, 30, k, 0.15, seed);
      spec.boost = 2.0;
      const auto g = generate(spec);
      VertexSet target(k - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) target[j] = static_cast<Vertex>(j);
      const auto size = neighborhood(g, target).size();
      const auto want = std::min<std::size_t>(30 - k + 1, static_cast<std::size_t>(std::lround(2.0 * 30 * 0.15)));
      CHECK(size >= want);
      const auto base = generate(make(GenKind::binomial, 30, k, 0.15, seed));
      for (const auto& e : base.edges()) CHECK(oracle::edge_set(g).count(e) == 1);
    }
}

TEST_CASE("infeasible and invalid specs are rejected") {
  auto too_many = make(GenKind::fixed_edges, 5, 2);
  too_many.edges = 11;
  CHECK(kind_of(too_many) == ErrorKind::infeasible);
  CHECK(kind_of(make(GenKind::binomial, 3, 4, 0.5)) == ErrorKind::infeasible);
  CHECK(kind_of(make(GenKind::binomial, 10, 3, 1.5)) == ErrorKind::invalid_argument);
  auto short_cycle = make(GenKind::loose_cycle, 0, 2);
  short_cycle.length = 2;
  CHECK_THROWS_AS(generate(short_cycle), Error);
  auto cramped = make(GenKind::loose_path, 4, 3);
  cramped.length = 2;
  CHECK(kind_of(cramped) == ErrorKind::infeasible);
  auto bad_target = make(GenKind::planted_bad, 10, 3, 0.2);
  bad_target.target = {1};
  CHECK_THROWS_AS(generate(bad_target), Error);
}

TEST_CASE("generated hypergraphs satisfy the core invariants") {
  for (auto kind : {GenKind::binomial, GenKind::fixed_edges, GenKind::planted_bad, GenKind::complete}) {
    const auto g = generate(make(kind, 11, 3, 0.25, 5));
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 3 * g.edge_count());
    CHECK(read_hypergraph(write_hypergraph(g)) == g);
  }
}
