#include "hypercount/combinatorics.hpp"

#include <limits>

#include "hypercount/error.hpp"

namespace hypercount {

namespace {

__extension__ using U128 = unsigned __int128;

// Returns false on overflow. Multiplies before dividing through a gcd-free
// update so every intermediate stays an exact integer.
bool checked_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t& out) noexcept {
  if (k > n) {
    out = 0;
    return true;
  }
  if (k > n - k) k = n - k;
  U128 acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc = acc * (n - k + j) / j;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 0;
  if (!checked_binomial(n, k, out)) {
    throw Error(ErrorKind::overflow, "binomial coefficient C(" + std::to_string(n) + "," +
                                         std::to_string(k) + ") exceeds 64 bits");
  }
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  std::uint64_t out = 0;
  if (!checked_binomial(n, k, out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

long double binomial_real(long double x, unsigned r) noexcept {
  long double acc = 1.0L;
  for (unsigned j = 0; j < r; ++j) acc *= (x - j) / static_cast<long double>(j + 1);
  return acc;
}

long double factorial(unsigned r) noexcept {
  long double acc = 1.0L;
  for (unsigned j = 2; j <= r; ++j) acc *= j;
  return acc;
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  U128 acc = 1;
  for (std::uint64_t j = 0; j < r; ++j) {
    acc *= (n - j);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::overflow, "falling factorial exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(std::span<const Vertex> sorted_set) {
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < sorted_set.size(); ++j) rank += binomial(sorted_set[j], j + 1);
  return rank;
}

std::vector<Vertex> colex_unrank(std::uint64_t rank, std::size_t size) {
  std::vector<Vertex> set(size);
  for (std::size_t j = size; j-- > 0;) {
    // Largest c with C(c, j+1) <= rank; galloping then bisection.
    std::uint64_t lo = j, hi = j + 1;
    while (binomial_saturating(hi, j + 1) <= rank) hi *= 2;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (binomial_saturating(mid, j + 1) <= rank) lo = mid; else hi = mid;
    }
    set[j] = static_cast<Vertex>(lo);
    rank -= binomial(lo, j + 1);
  }
  return set;
}

bool next_combination(std::span<std::uint32_t> combo, std::uint32_t n) noexcept {
  const std::size_t r = combo.size();
  if (r == 0) return false;
  std::size_t j = r;
  while (j-- > 0) {
    if (combo[j] < n - (r - j)) {
      ++combo[j];
      for (std::size_t t = j + 1; t < r; ++t) combo[t] = combo[t - 1] + 1;
      return true;
    }
  }
  return false;
}

long double ratio_power(std::uint64_t num, std::uint64_t den, unsigned r) noexcept {
  long double top = 1.0L, bottom = 1.0L;
  for (unsigned j = 0; j < r; ++j) {
    top *= static_cast<long double>(num);
    bottom *= static_cast<long double>(den);
  }
  return top / bottom;
}

}  // namespace hypercount
