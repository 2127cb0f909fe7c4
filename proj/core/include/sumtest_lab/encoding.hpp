#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "sumtest_lab/bitstring.hpp"

namespace sumtest_lab {

// Numerals identify numbers with strings. The default is the bijective
// binary code (a length-then-lexicographic order isomorphism); unary
// restores the paper's 0^n convention for small runs.
enum class NumeralMode { kBijectiveBinary, kUnary };

std::string numeral_mode_name(NumeralMode mode);
NumeralMode parse_numeral_mode(const std::string& name);

// Bijective binary: 0 -> "", 1 -> "0", 2 -> "1", 3 -> "00", 4 -> "01", ...
BitString encode_num(std::uint64_t n, NumeralMode mode = NumeralMode::kBijectiveBinary);
std::uint64_t decode_num(const BitString& s, NumeralMode mode = NumeralMode::kBijectiveBinary);

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-delimiting pairing: Elias gamma code of |x|+1, then x, then y.
BitString pair_encode(const BitString& x, const BitString& y);
// Inverse; throws DecodeError on malformed input.
std::pair<BitString, BitString> pair_decode(const BitString& z);

}  // namespace sumtest_lab
