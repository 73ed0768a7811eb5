#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hypercount {

using Vertex = std::uint32_t;

/// Exact binomial coefficient. Throws Error(overflow) if the value does not
/// fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Binomial coefficient saturated at UINT64_MAX instead of throwing.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

/// Generalized binomial x(x-1)...(x-r+1)/r! for real x.
long double binomial_real(long double x, unsigned r) noexcept;

long double factorial(unsigned r) noexcept;

/// Falling factorial n(n-1)...(n-r+1) as an exact integer; throws on overflow.
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r);

/// Colexicographic rank of a strictly increasing vertex set:
/// sum over j of C(set[j], j+1).
std::uint64_t colex_rank(std::span<const Vertex> sorted_set);

/// Inverse of colex_rank for sets of the given size.
std::vector<Vertex> colex_unrank(std::uint64_t rank, std::size_t size);

/// Advances a strictly increasing index combination drawn from [0, n) to the
/// next one in lexicographic order. Returns false after the last one.
bool next_combination(std::span<std::uint32_t> combo, std::uint32_t n) noexcept;

/// num^r / den^r evaluated so that small exact ratios (e.g. 30/15) come out
/// exact: numerator and denominator are formed first, then divided once.
long double ratio_power(std::uint64_t num, std::uint64_t den, unsigned r) noexcept;

}  // namespace hypercount
