#include "sumtest_lab/encoding.hpp"

#include <bit>

namespace sumtest_lab {

std::string numeral_mode_name(NumeralMode mode) {
  return mode == NumeralMode::kBijectiveBinary ? "binary" : "unary";
}

NumeralMode parse_numeral_mode(const std::string& name) {
  if (name == "binary") return NumeralMode::kBijectiveBinary;
  if (name == "unary") return NumeralMode::kUnary;
  throw std::invalid_argument("numerals: expected 'binary' or 'unary', got '" + name + "'");
}

BitString encode_num(std::uint64_t n, NumeralMode mode) {
  if (mode == NumeralMode::kUnary) {
    return BitString::zeros(n);
  }
  // n+1 in binary with the leading 1 dropped.
  if (n == UINT64_MAX) throw std::overflow_error("encode_num: numeral out of range");
  std::uint64_t v = n + 1;
  int width = std::bit_width(v) - 1;
  BitString out;
  for (int i = width - 1; i >= 0; --i) out.push_back(static_cast<int>((v >> i) & 1u));
  return out;
}

std::uint64_t decode_num(const BitString& s, NumeralMode mode) {
  if (mode == NumeralMode::kUnary) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.bit(i) != 0) throw DecodeError("decode_num: unary numeral with a 1 bit");
    }
    return s.size();
  }
  if (s.size() >= 64) throw DecodeError("decode_num: numeral too long");
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < s.size(); ++i) v = (v << 1) | static_cast<std::uint64_t>(s.bit(i));
  return v - 1;
}

namespace {

// Elias gamma code of a positive integer: bit_width-1 zeros, then the
// binary digits (leading 1 included).
void gamma_append(BitString& out, std::uint64_t v) {
  int width = std::bit_width(v);
  for (int i = 0; i < width - 1; ++i) out.push_back(0);
  for (int i = width - 1; i >= 0; --i) out.push_back(static_cast<int>((v >> i) & 1u));
}

}  // namespace

BitString pair_encode(const BitString& x, const BitString& y) {
  BitString out;
  gamma_append(out, static_cast<std::uint64_t>(x.size()) + 1);
  out.append(x);
  out.append(y);
  return out;
}

std::pair<BitString, BitString> pair_decode(const BitString& z) {
  std::size_t pos = 0;
  std::size_t zeros = 0;
  while (pos < z.size() && z.bit(pos) == 0) {
    ++zeros;
    ++pos;
  }
  if (pos >= z.size()) throw DecodeError("pair_decode: gamma prefix runs off the end");
  if (zeros >= 63) throw DecodeError("pair_decode: gamma length field too wide");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i <= zeros; ++i) {
    if (pos >= z.size()) throw DecodeError("pair_decode: truncated gamma value");
    v = (v << 1) | static_cast<std::uint64_t>(z.bit(pos++));
  }
  std::uint64_t xlen = v - 1;
  if (z.size() - pos < xlen) throw DecodeError("pair_decode: first component truncated");
  BitString x, y;
  for (std::uint64_t i = 0; i < xlen; ++i) x.push_back(z.bit(pos++));
  while (pos < z.size()) y.push_back(z.bit(pos++));
  return {std::move(x), std::move(y)};
}

}  // namespace sumtest_lab
