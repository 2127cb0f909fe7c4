#include "sumtest_lab/dyadic.hpp"

#include <stdexcept>

namespace sumtest_lab {

namespace {

// Common-scale mantissas for comparison and addition.
void align(const Dyadic& a, const Dyadic& b, mpz_class& ma, mpz_class& mb, std::uint64_t& scale) {
  scale = std::max(a.scale(), b.scale());
  ma = a.mantissa() << static_cast<unsigned long>(scale - a.scale());
  mb = b.mantissa() << static_cast<unsigned long>(scale - b.scale());
}

}  // namespace

Dyadic::Dyadic(mpz_class mantissa, std::uint64_t scale) : mantissa_(std::move(mantissa)), scale_(scale) {
  if (mantissa_ < 0) throw std::invalid_argument("dyadic: negative mantissa");
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  unsigned long twos = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (twos > scale_) twos = static_cast<unsigned long>(scale_);
  if (twos > 0) {
    mantissa_ >>= twos;
    scale_ -= twos;
  }
}

Dyadic Dyadic::pow2(std::int64_t e) {
  if (e >= 0) {
    mpz_class m = 1;
    m <<= static_cast<unsigned long>(e);
    return Dyadic(std::move(m), 0);
  }
  return Dyadic(mpz_class(1), static_cast<std::uint64_t>(-e));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  mpz_class ma, mb;
  std::uint64_t s;
  align(*this, o, ma, mb, s);
  return Dyadic(ma + mb, s);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(mantissa_ * o.mantissa_, scale_ + o.scale_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  mpz_class ma, mb;
  std::uint64_t s;
  align(a, b, ma, mb, s);
  int c = cmp(ma, mb);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::text() const {
  return mantissa_.get_str() + "/2^" + std::to_string(scale_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto sep = text.find("/2^");
  if (sep == std::string_view::npos) throw std::invalid_argument("dyadic: missing /2^ in '" + std::string(text) + "'");
  std::string mant(text.substr(0, sep));
  std::string scale(text.substr(sep + 3));
  if (mant.empty() || scale.empty()) throw std::invalid_argument("dyadic: malformed '" + std::string(text) + "'");
  for (char c : mant)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("dyadic: bad mantissa");
  for (char c : scale)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("dyadic: bad scale");
  return Dyadic(mpz_class(mant), std::stoull(scale));
}

std::optional<std::uint64_t> leftmost_diff_bit(const Dyadic& a, const Dyadic& b) {
  if (a >= Dyadic::one() || b >= Dyadic::one()) {
    throw std::domain_error("leftmost_diff_bit: inputs must lie in [0,1)");
  }
  mpz_class ma, mb;
  std::uint64_t s;
  align(a, b, ma, mb, s);
  mpz_class x = ma ^ mb;
  if (x == 0) return std::nullopt;
  // Fraction bit i is integer bit s-i of the aligned mantissas (both < 2^s).
  std::size_t msb = mpz_sizeinbase(x.get_mpz_t(), 2);  // index of highest set bit + 1
  return s - (msb - 1);
}

}  // namespace sumtest_lab
