#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "sumtest_lab/dyadic.hpp"

namespace sumtest_lab {

// Exact nonnegative rational: a ratio of two dyadics. Comparison and
// summation go through cross-multiplication; no rounding anywhere.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(const Dyadic& d);  // implicit: masses flow into test values
  Rational(const Dyadic& num, const Dyadic& den);
  Rational(unsigned long num, unsigned long den);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1ul, 1ul); }

  // Canonical split: all powers of two live in the numerator's scale, the
  // denominator is an odd integer. Round-trips bit-exactly through text().
  Dyadic numerator() const;
  Dyadic denominator() const;

  bool is_zero() const { return q_ == 0; }
  const mpq_class& value() const { return q_; }

  Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
  Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "num DIV den" with both sides in dyadic syntax, e.g. "5/2^2 DIV 3/2^0".
  std::string text() const;
  static Rational parse(std::string_view text);

 private:
  explicit Rational(mpq_class q);
  mpq_class q_;  // canonical, nonnegative
};

// Exact, order-independent sum. All values must be nonnegative (guaranteed
// by construction of Rational).
Rational rational_sum(std::span<const Rational> values);

}  // namespace sumtest_lab
