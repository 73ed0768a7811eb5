#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "hypercount/error.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/properties.hpp"
#include "oracles.hpp"

using namespace hypercount;

namespace {

Hypergraph complete(std::size_t n, std::size_t k) {
  GenSpec spec;
  spec.kind = GenKind::complete;
  spec.n = n;
  spec.k = k;
  return generate(spec);
}

Hypergraph binomial(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.k = k;
  spec.p = p;
  spec.seed = seed;
  return generate(spec);
}

BddParams bdd_params(std::size_t d, double C, std::optional<std::size_t> i = {}, std::optional<double> p = {}) {
  BddParams params;
  params.d = d;
  params.C = C;
  params.i = i;
  params.p = p;
  return params;
}

TupleParams tuple_params(std::size_t d, double delta, std::optional<std::size_t> i = {}) {
  TupleParams params;
  params.d = d;
  params.delta = delta;
  params.i = i;
  return params;
}

}  // namespace

TEST_CASE("bdd examples") {
  CHECK(check_bdd(complete(4, 2), bdd_params(2, 1.0, 1, 1.0)).holds);
  CHECK(check_bdd(Hypergraph::empty(6, 3), bdd_params(2, 2.0)).holds);
  for (std::size_t k = 2; k <= 4; ++k) {
    VertexSet e(k);
    for (std::size_t j = 0; j < k; ++j) e[j] = static_cast<Vertex>(j);
    CHECK(check_bdd(Hypergraph(k, k, {e}), bdd_params(1, 1.0)).holds);
  }
}

TEST_CASE("bdd reports the strict violation and its witness") {
  // In the complete graph on 4 vertices each vertex has 3 neighbours; with
  // C·n·p = 3 exactly there is no violation, just below it every singleton fails.
  const auto k4 = complete(4, 2);
  CHECK(check_bdd(k4, bdd_params(1, 0.75, 1, 1.0)).holds);
  const auto v = check_bdd(k4, bdd_params(1, 0.74, 1, 1.0));
  CHECK_FALSE(v.holds);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses.front().count == 3);
  CHECK(v.levels.at(0).bad == 4);
}

TEST_CASE("tuple examples") {
  const auto k3 = complete(10, 3);
  const auto fail = check_tuple(k3, tuple_params(1, 0.1));
  CHECK_FALSE(fail.holds);
  CHECK(fail.bad_fraction == 1.0);
  CHECK(check_tuple(k3, tuple_params(1, 0.25)).holds);

  CHECK(check_tuple(complete(30, 2), tuple_params(1, 0.05)).holds);
  CHECK_FALSE(check_tuple(Hypergraph::empty(8, 3), tuple_params(2, 0.5)).holds);
}

TEST_CASE("pseudorandomness examples") {
  PseudoParams params;
  params.d1 = 2;
  params.C = 2.0;
  params.d2 = 2;
  params.delta = 0.1;
  CHECK(check_pseudorandom(complete(100, 2), params).holds);
  const auto empty = check_pseudorandom(Hypergraph::empty(10, 2), params);
  CHECK_FALSE(empty.holds);
  CHECK(empty.bdd.holds);
  CHECK_FALSE(empty.tuple.holds);

  // At n = 60 the depth-2 target n·p² is about 5.4, so joint neighborhoods
  // spread like a Poisson variable and roughly half of all pairs leave a ±30%
  // band. Depth 1 (target about 18) is comfortably inside.
  params.delta = 0.3;
  params.scan.exact_limit = 5'000'000;
  const auto g = binomial(60, 3, 0.3, 3);
  const auto deep = check_pseudorandom(g, params);
  CHECK_FALSE(deep.holds);
  CHECK(deep.tuple.levels.at(1).bad_fraction > 0.3);
  params.d1 = params.d2 = 1;
  CHECK(check_pseudorandom(g, params).holds);
}

TEST_CASE("exact mode refuses to run past its limit") {
  auto params = tuple_params(2, 0.5);
  params.scan.exact_limit = 100;
  CHECK_THROWS_AS(check_tuple(complete(20, 2), params), Error);
  params.scan.mode = CheckMode::sampled;
  params.scan.samples = 500;
  const auto v = check_tuple(complete(20, 2), params);
  CHECK(v.mode == CheckMode::sampled);
  CHECK(v.levels.at(1).ci_low.has_value());
}

TEST_CASE("parameter validation") {
  const auto g = complete(6, 3);
  CHECK_THROWS_AS(check_bdd(g, bdd_params(0, 2.0)), Error);
  CHECK_THROWS_AS(check_bdd(g, bdd_params(2, 2.0, 3)), Error);
  CHECK_THROWS_AS(check_bdd(g, bdd_params(2, 2.0, 0)), Error);
  CHECK_THROWS_AS(check_tuple(g, tuple_params(2, 1.5)), Error);
  CHECK_THROWS_AS(check_tuple(g, tuple_params(2, 0.0)), Error);
}

TEST_CASE("bad families on a star") {
  // Centre 0 with leaves 1..5: n = 6, p = 1/3, np = 2 and δnp = 1. The centre
  // deviates by 3 and each leaf by exactly 1, which counts as bad.
  const Hypergraph star(6, 2, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const auto bad = bad_families(star, 0.5, 1, false);
  CHECK(bad.size() == 6);
  CHECK(bad_families(star, 0.5, 1, true).size() == 6);
  CHECK(is_bad_family(star, SubsetFamily(std::vector<VertexSet>{{0}}), 0.5, true));
  CHECK(is_bad_family(star, SubsetFamily(std::vector<VertexSet>{{3}}), 0.5, false));
  CHECK_FALSE(is_bad_family(star, SubsetFamily(std::vector<VertexSet>{{3}}), 0.51, false));
  CHECK(is_bad_family(star, SubsetFamily(std::vector<VertexSet>{{0}}), 0.51, false));

  // Pairs {0, leaf} span an edge, so they drop out of the stable variant.
  const auto pairs = bad_families(star, 0.5, 2, true);
  for (const auto& f : pairs) CHECK(f.sets().front() != VertexSet{0});
}

TEST_CASE("stable bad families are a subset of bad families") {
  oracle::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_hypergraph(7, 2 + t % 2, 0.5, rng);
    if (g.edge_count() == 0) continue;
    for (std::size_t r = 1; r <= 2; ++r) {
      const auto all = bad_families(g, 0.3, r, false);
      const auto stable = bad_families(g, 0.3, r, true);
      for (const auto& f : stable) CHECK(std::find(all.begin(), all.end(), f) != all.end());
    }
  }
  CHECK(bad_families(complete(6, 2), 0.2, 2, true).empty());
}

TEST_CASE("concentration check examples") {
  const std::vector<double> flat(10, 3.0);
  const auto c = concentration_check(flat, 3.0, 0.01, 0.1);
  CHECK(c.premises_hold);
  CHECK(c.conclusion_holds);
  CHECK(c.within_band == 10);

  const std::vector<double> split{0.0, 2.0};
  const auto s = concentration_check(split, 1.0, 100.0, 0.4);
  CHECK(s.premises_hold);
  CHECK_FALSE(s.conclusion_holds);
  CHECK(s.within_band == 0);

  const std::vector<double> low{0.1, 0.1};
  CHECK_FALSE(concentration_check(low, 1.0, 0.1, 0.5).premises_hold);
  CHECK_THROWS_AS(concentration_check(std::vector<double>{}, 1.0, 0.1, 0.1), Error);
}

TEST_CASE("binomial ratio gap") {
  const double direct = std::fabs(124750.0 - 0.25 * 499500.0) / (0.25 * 499500.0);
  CHECK(binomial_ratio_gap(1000, 0.5, 2) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(binomial_ratio_gap(1000, 0.5, 2) == doctest::Approx(0.001001).epsilon(1e-3));
  CHECK(binomial_ratio_gap(500, 1.0, 3) == 0.0);
  CHECK(binomial_ratio_gap(777, 0.37, 1) == doctest::Approx(0.0).epsilon(1e-12));
  for (double a : {0.1, 0.3, 0.5, 0.9})
    for (unsigned r : {2u, 3u}) CHECK(binomial_ratio_gap(10000, a, r) < binomial_ratio_gap(100, a, r));
}

TEST_CASE("checks are monotone in their parameters") {
  oracle::Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    const auto g = oracle::random_hypergraph(8, 3, 0.5, rng);
    if (g.edge_count() == 0) continue;
    for (double C : {1.5, 2.0, 3.0}) {
      if (!check_bdd(g, bdd_params(2, C)).holds) continue;
      CHECK(check_bdd(g, bdd_params(1, C)).holds);
      CHECK(check_bdd(g, bdd_params(2, C + 0.5)).holds);
    }
    for (double delta : {0.2, 0.4, 0.6}) {
      if (!check_tuple(g, tuple_params(2, delta)).holds) continue;
      CHECK(check_tuple(g, tuple_params(2, delta + 0.1)).holds);
    }
  }
}

TEST_CASE("exact checkers agree with the brute-force oracle") {
  oracle::Rng rng(123);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 2 + t % 2;
    const std::size_t n = 5 + t % 3;
    const auto g = oracle::random_hypergraph(n, k, 0.5, rng);
    if (g.edge_count() == 0) continue;
    for (std::size_t i = 1; i < k; ++i) {
      for (double C : {1.0, 1.5, 2.5}) {
        CHECK(check_bdd(g, bdd_params(2, C, i)).holds == oracle::bdd(g, 2, C, i));
      }
      for (double delta : {0.2, 0.5}) {
        const auto v = check_tuple(g, tuple_params(2, delta, i));
        for (const auto& level : v.levels) CHECK(level.bad == oracle::tuple_bad(g, level.r, delta, i));
      }
    }
  }
}

TEST_CASE("sampled bad fractions spread like binomial draws") {
  const auto g = binomial(30, 3, 0.3, 4);
  auto params = tuple_params(1, 0.2);
  params.scan.mode = CheckMode::sampled;
  params.scan.samples = 400;
  const double truth = check_tuple(g, tuple_params(1, 0.2)).levels.at(0).bad_fraction;
  REQUIRE(truth > 0.05);
  REQUIRE(truth < 0.95);
  double stat = 0.0;
  const int seeds = 30;
  for (int s = 0; s < seeds; ++s) {
    params.scan.seed = 1000 + static_cast<std::uint64_t>(s);
    const auto level = check_tuple(g, params).levels.at(0);
    const double observed = static_cast<double>(level.bad);
    const double expected = truth * static_cast<double>(level.checked);
    stat += (observed - expected) * (observed - expected) / (expected * (1.0 - truth));
  }
  const boost::math::chi_squared dist(seeds);
  const double p_value = boost::math::cdf(boost::math::complement(dist, stat));
  CHECK(p_value > 1e-3);
}

TEST_CASE("sampled scans do not depend on the worker count") {
  const auto g = binomial(25, 3, 0.4, 8);
  auto params = tuple_params(2, 0.3);
  params.scan.mode = CheckMode::sampled;
  params.scan.samples = 9000;
  params.scan.seed = 5;
  params.scan.workers = 1;
  const auto one = check_tuple(g, params);
  params.scan.workers = 4;
  const auto four = check_tuple(g, params);
  REQUIRE(one.levels.size() == four.levels.size());
  for (std::size_t r = 0; r < one.levels.size(); ++r) {
    CHECK(one.levels[r].bad == four.levels[r].bad);
    CHECK(one.levels[r].mean_count == four.levels[r].mean_count);
  }
  CHECK(one.witnesses.size() == four.witnesses.size());
}

TEST_CASE("tuple bands hold for most binomial hosts near the sparse threshold") {
  for (std::size_t n : {40u, 60u, 80u}) {
    const double p = std::pow(static_cast<double>(n), -1.0 / 3.0);
    int first = 0, last = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto g = binomial(n, 3, p, seed);
      auto one = tuple_params(2, 0.5, 1);
      auto two = tuple_params(2, 0.5);
      two.scan.exact_limit = 20'000'000;
      first += check_tuple(g, one).holds ? 1 : 0;
      last += check_tuple(g, two).holds ? 1 : 0;
    }
    CHECK(first >= 19);
    CHECK(last >= 19);
  }
}
