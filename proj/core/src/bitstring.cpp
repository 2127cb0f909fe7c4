#include "sumtest_lab/bitstring.hpp"

#include <stdexcept>

namespace sumtest_lab {

BitString BitString::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring: invalid character '" + std::string(1, c) + "'");
    }
  }
  return BitString(std::string(text));
}

BitString BitString::from_rank(std::size_t length, std::uint64_t rank) {
  if (length > 64) throw std::invalid_argument("bitstring: from_rank length > 64");
  if (length < 64 && rank >> length) throw std::invalid_argument("bitstring: rank out of range");
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((rank >> (length - 1 - i)) & 1u) s[i] = '1';
  }
  return BitString(std::move(s));
}

bool BitString::is_proper_prefix_of(const BitString& other) const {
  return size() < other.size() && other.bits_.compare(0, size(), bits_) == 0;
}

std::uint64_t BitString::rank() const {
  if (size() > 64) throw std::logic_error("bitstring: rank of string longer than 64 bits");
  std::uint64_t r = 0;
  for (char c : bits_) r = (r << 1) | static_cast<std::uint64_t>(c - '0');
  return r;
}

}  // namespace sumtest_lab
