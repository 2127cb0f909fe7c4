#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace sumtest_lab {

// A finite binary string. Bits live in an ASCII '0'/'1' buffer, which doubles
// as the serialization format. The total order is length-then-lexicographic
// (the order of the adversary list and of enumeration output); within a fixed
// length that coincides with plain lexicographic order.
class BitString {
 public:
  BitString() = default;

  // Rejects anything but '0'/'1'.
  static BitString parse(std::string_view text);

  static BitString zeros(std::size_t n) { return BitString(std::string(n, '0')); }

  // The rank-th string of {0,1}^length in lexicographic order. length <= 64.
  static BitString from_rank(std::size_t length, std::uint64_t rank);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // 0-based; returns 0 or 1.
  int bit(std::size_t i) const { return bits_[i] - '0'; }

  void push_back(int b) { bits_.push_back(b ? '1' : '0'); }
  void append(const BitString& other) { bits_ += other.bits_; }

  BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }
  bool is_proper_prefix_of(const BitString& other) const;

  // Lexicographic rank within {0,1}^size(). size() <= 64.
  std::uint64_t rank() const;

  const std::string& text() const { return bits_; }

  friend bool operator==(const BitString& a, const BitString& b) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

}  // namespace sumtest_lab
