#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sumtest_lab/bitstring.hpp"
#include "sumtest_lab/dyadic.hpp"
#include "sumtest_lab/machine.hpp"

namespace sumtest_lab {

// Exhaustively enumerates the halting domain: every program p with
// |p| <= max_len that halts within `budget` steps consuming exactly |p| bits.
// The search walks the prefix tree and only extends NEEDS_BITS nodes, so
// halted/diverged/out-of-time subtrees are pruned; bit-identical to the
// brute-force sweep over all candidates. Records come back sorted
// length-then-lexicographic. With workers > 1 the tree is partitioned by
// program prefix; the merged result is defined to equal the sequential run.
std::vector<HaltRecord> enumerate_halting(std::size_t max_len, std::uint64_t budget,
                                          const BitString& condition, unsigned workers = 1);

// Query index over one enumerated domain (one condition, fixed max_len and
// budget). Stage-t queries read off the records with |p| <= min(t, max_len)
// and steps <= t; they are only valid for t <= budget.
class DomainIndex {
 public:
  DomainIndex() = default;
  DomainIndex(std::vector<HaltRecord> records, std::size_t max_len, std::uint64_t budget);

  struct Entry {
    std::uint64_t len;
    std::uint64_t steps;
  };

  // Sum of 2^{-|p|} over records with output x at stage `stage`.
  Dyadic mass(const BitString& x, std::uint64_t stage) const;

  // Shortest program length for output x at stage `stage`; nullopt = none.
  std::optional<std::uint64_t> min_program_len(const BitString& x, std::uint64_t stage) const;

  // Kraft sum over the whole stage-restricted domain.
  Dyadic kraft(std::size_t len_cap, std::uint64_t steps_cap) const;

  const std::vector<HaltRecord>& records() const { return records_; }
  const std::map<BitString, std::vector<Entry>>& by_output() const { return by_output_; }
  std::size_t max_len() const { return max_len_; }
  std::uint64_t budget() const { return budget_; }

  // Stages at which mass(x, .) can change: max(|p|, steps) per record.
  std::vector<std::uint64_t> mass_breakpoints(const BitString& x) const;

 private:
  void check_stage(std::uint64_t stage) const;

  std::vector<HaltRecord> records_;
  std::map<BitString, std::vector<Entry>> by_output_;
  std::size_t max_len_ = 0;
  std::uint64_t budget_ = 0;
};

}  // namespace sumtest_lab
