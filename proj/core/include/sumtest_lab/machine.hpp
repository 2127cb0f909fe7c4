#pragma once

#include <cstdint>
#include <string_view>

#include "sumtest_lab/bitstring.hpp"

namespace sumtest_lab {

// The reference prefix machine RPM-1.
//
// Programs are read bit-on-demand, so the set of exactly-consumed halting
// programs is prefix-free per condition. Opcodes and step costs:
//
//   0b   append literal bit b to the output            cost 1
//   100  HALT                                          cost 1
//   101  COPY: append a copy of the current output     cost |output|+1
//   110  READC: append the next unread condition bit   cost 1
//        (diverges if the condition is exhausted)
//   111  diverge
//
// A budget bounds total step cost; the cost of an opcode is charged before
// it executes, so an opcode that would overrun the budget never runs.
struct MachineSpec {
  static constexpr std::string_view kVersionId = "RPM-1";
  static constexpr int kCacheFormatVersion = 1;
};

enum class RunStatus { kHalted, kOutOfTime, kNeedsBits, kDiverged };

std::string_view run_status_name(RunStatus s);

// HALTED carries output/consumed/steps; OUT_OF_TIME carries steps;
// NEEDS_BITS carries consumed (bits read before the tape ran dry);
// DIVERGED carries nothing. Unused fields are zero/empty.
struct RunOutcome {
  RunStatus status = RunStatus::kDiverged;
  BitString output;
  std::uint64_t consumed = 0;
  std::uint64_t steps = 0;
};

RunOutcome run(const BitString& program, const BitString& condition, std::uint64_t budget);

// One halting computation; replaying `program` under `condition` reproduces
// it exactly. consumed always equals |program| for domain elements.
struct HaltRecord {
  BitString program;
  BitString condition;
  BitString output;
  std::uint64_t steps = 0;
  std::uint64_t consumed = 0;

  friend bool operator==(const HaltRecord&, const HaltRecord&) = default;
};

}  // namespace sumtest_lab
