#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hypercount/combinatorics.hpp"
#include "hypercount/error.hpp"
#include "hypercount/parallel.hpp"
#include "hypercount/rng.hpp"
#include "oracles.hpp"

using namespace hypercount;

TEST_CASE("binomial small values and symmetry") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(20, 3) == 1140);
  for (std::uint64_t n = 0; n < 40; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("binomial overflow throws, saturating version clamps") {
  CHECK(binomial(67, 33) == 14226520737620288370ULL);
  CHECK_THROWS_AS(binomial(68, 34), Error);
  CHECK(binomial_saturating(68, 34) == UINT64_MAX);
}

TEST_CASE("falling factorial and factorial") {
  CHECK(falling_factorial(7, 5) == 2520);
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(factorial(5) == doctest::Approx(120.0));
}

TEST_CASE("real binomial matches integer binomial on integers") {
  for (unsigned r = 0; r < 6; ++r) CHECK(binomial_real(12.0L, r) == doctest::Approx(static_cast<double>(binomial(12, r))));
  CHECK(binomial_real(2.5L, 2) == doctest::Approx(2.5 * 1.5 / 2.0));
}

TEST_CASE("colex rank and unrank are inverse and order-preserving") {
  for (std::size_t size = 1; size <= 4; ++size) {
    const auto sets = oracle::subsets(9, size);
    std::vector<std::uint64_t> ranks;
    for (const auto& s : sets) {
      const auto r = colex_rank(s);
      CHECK(colex_unrank(r, size) == s);
      ranks.push_back(r);
    }
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t j = 0; j < ranks.size(); ++j) CHECK(ranks[j] == j);
  }
  CHECK(colex_rank(std::vector<Vertex>{0, 1, 2}) == 0);
  CHECK(colex_rank(std::vector<Vertex>{0, 1, 3}) == 1);
}

TEST_CASE("next_combination walks all combinations in lexicographic order") {
  std::vector<std::uint32_t> c{0, 1, 2};
  std::size_t count = 1;
  while (next_combination(c, 6)) ++count;
  CHECK(count == 20);
}

TEST_CASE("ratio_power is exact for small ratios") {
  CHECK(ratio_power(30, 15, 2) == 4.0L);
  CHECK(ratio_power(1, 3, 0) == 1.0L);
  CHECK(static_cast<double>(ratio_power(5, 15, 1)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("counter rng is a pure function of its key and counter") {
  CounterRng a(7, 1, 2), b(7, 1, 2), c(7, 1, 3);
  for (int j = 0; j < 10; ++j) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  CounterRng d(1, 0);
  for (int j = 0; j < 1000; ++j) {
    CHECK(d.below(7) < 7);
    const double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("parallel_for runs every task once and rethrows the lowest failure") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t t) { hits[t] += 1; });
  for (int h : hits) CHECK(h == 1);
  try {
    parallel_for(10, 3, [](std::size_t t) {
      if (t == 3 || t == 7) throw std::runtime_error("task " + std::to_string(t));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "task 3");
  }
}
