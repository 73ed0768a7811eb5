#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace hypercount::detail {

__extension__ using U128 = unsigned __int128;

/// The value base·(E/N)^r, kept as the exact fraction num/den when it fits in
/// 128 bits so that counts sitting exactly on a threshold are classified
/// without rounding. Falls back to long double otherwise, or when p was given
/// as a plain double.
class Threshold {
 public:
  static Threshold rational(std::uint64_t base, std::uint64_t edges, std::uint64_t total, unsigned r) {
    Threshold t;
    t.value_ = static_cast<long double>(base);
    for (unsigned j = 0; j < r; ++j) t.value_ *= static_cast<long double>(edges) / static_cast<long double>(total);
    U128 num = base, den = 1;
    for (unsigned j = 0; j < r; ++j) {
      if (!mul(num, edges) || !mul(den, total)) return t;
    }
    // Counts are multiplied by den later; keep headroom for 32-bit counts.
    if (den >> 95 != 0) return t;
    t.num_ = num;
    t.den_ = den;
    t.exact_ = true;
    return t;
  }

  static Threshold approximate(long double value) {
    Threshold t;
    t.value_ = value;
    return t;
  }

  long double value() const noexcept { return value_; }

  /// c > factor·value
  bool exceeded_by(std::uint64_t c, double factor) const {
    if (exact_ && c >> 32 == 0) {
      if (const auto cmp = compare(U128{c} * den_, factor, num_)) return *cmp > 0;
    }
    return static_cast<long double>(c) > static_cast<long double>(factor) * value_;
  }

  /// |c - value| < delta·value
  bool within(std::uint64_t c, double delta) const {
    if (exact_ && c >> 32 == 0) {
      const U128 scaled = U128{c} * den_;
      const U128 diff = scaled >= num_ ? scaled - num_ : num_ - scaled;
      if (const auto cmp = compare(diff, delta, num_)) return *cmp < 0;
    }
    return std::fabs(static_cast<long double>(c) - value_) < static_cast<long double>(delta) * value_;
  }

 private:
  static bool mul(U128& acc, std::uint64_t f) {
    if (f != 0 && acc > ~U128{0} / f) return false;
    acc *= f;
    return true;
  }

  // Sign of a - x·y for a double x >= 0, or nothing if it cannot be done in 128 bits.
  static std::optional<int> compare(U128 a, double x, U128 y) {
    if (!(x >= 0.0) || !std::isfinite(x)) return std::nullopt;
    if (x == 0.0 || y == 0) return a > 0 ? 1 : 0;
    int e = 0;
    const double f = std::frexp(x, &e);
    const auto m = static_cast<std::uint64_t>(std::ldexp(f, 53));
    const int q = e - 53;
    if (y >> 74 != 0) return std::nullopt;
    U128 rhs = U128{m} * y;
    U128 lhs = a;
    if (q >= 0) {
      if (q >= 127 || rhs >> (127 - q) != 0) return std::nullopt;
      rhs <<= q;
    } else {
      const int s = -q;
      if (s >= 127 || lhs >> (127 - s) != 0) return std::nullopt;
      lhs <<= s;
    }
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  }

  long double value_ = 0.0L;
  bool exact_ = false;
  U128 num_ = 0;
  U128 den_ = 1;
};

}  // namespace hypercount::detail
