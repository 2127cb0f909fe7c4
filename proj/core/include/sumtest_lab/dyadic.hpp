#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sumtest_lab {

// Exact nonnegative dyadic rational mantissa / 2^scale. Canonical form keeps
// the scale minimal: mantissa is odd whenever scale > 0, and zero has scale 0.
// All arithmetic is exact; there is no rounding anywhere in the lab.
class Dyadic {
 public:
  Dyadic() : mantissa_(0), scale_(0) {}
  explicit Dyadic(unsigned long n) : mantissa_(n), scale_(0) {}
  Dyadic(mpz_class mantissa, std::uint64_t scale);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1ul); }
  // 2^e for any (possibly negative) exponent.
  static Dyadic pow2(std::int64_t e);

  const mpz_class& mantissa() const { return mantissa_; }
  std::uint64_t scale() const { return scale_; }
  bool is_zero() const { return mantissa_ == 0; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic half() const { return Dyadic(mantissa_, scale_ + 1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "mantissa/2^scale" in decimal, e.g. "5/2^4".
  std::string text() const;
  static Dyadic parse(std::string_view text);

 private:
  mpz_class mantissa_;      // nonnegative
  std::uint64_t scale_;
};

// Position (counted from 1 at the coefficient of 2^-1) of the leftmost
// fractional bit where a and b differ; nullopt iff a == b.
// Both inputs must lie in [0, 1).
std::optional<std::uint64_t> leftmost_diff_bit(const Dyadic& a, const Dyadic& b);

}  // namespace sumtest_lab
