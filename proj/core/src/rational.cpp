#include "sumtest_lab/rational.hpp"

#include <stdexcept>

namespace sumtest_lab {

namespace {

mpq_class dyadic_to_mpq(const Dyadic& d) {
  mpz_class den = 1;
  den <<= static_cast<unsigned long>(d.scale());
  mpq_class q(d.mantissa(), den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
  if (q_ < 0) throw std::invalid_argument("rational: negative value");
}

Rational::Rational(const Dyadic& d) : Rational(dyadic_to_mpq(d)) {}

Rational::Rational(const Dyadic& num, const Dyadic& den) {
  if (den.is_zero()) throw std::invalid_argument("rational: zero denominator");
  mpq_class q = dyadic_to_mpq(num) / dyadic_to_mpq(den);
  q.canonicalize();
  q_ = std::move(q);
}

Rational::Rational(unsigned long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  return Rational(q_ / o.q_);
}

Dyadic Rational::numerator() const {
  mpz_class num = q_.get_num();
  mpz_class den = q_.get_den();
  unsigned long twos = den == 1 ? 0 : mpz_scan1(den.get_mpz_t(), 0);
  return Dyadic(num, twos);
}

Dyadic Rational::denominator() const {
  mpz_class den = q_.get_den();
  unsigned long twos = den == 1 ? 0 : mpz_scan1(den.get_mpz_t(), 0);
  return Dyadic(den >> twos, 0);
}

std::string Rational::text() const {
  return numerator().text() + " DIV " + denominator().text();
}

Rational Rational::parse(std::string_view text) {
  auto sep = text.find(" DIV ");
  if (sep == std::string_view::npos) throw std::invalid_argument("rational: missing DIV in '" + std::string(text) + "'");
  Dyadic num = Dyadic::parse(text.substr(0, sep));
  Dyadic den = Dyadic::parse(text.substr(sep + 5));
  return Rational(num, den);
}

Rational rational_sum(std::span<const Rational> values) {
  Rational acc;
  for (const Rational& v : values) acc += v;
  return acc;
}

}  // namespace sumtest_lab
