#include "sumtest_lab/machine.hpp"

namespace sumtest_lab {

std::string_view run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::kHalted: return "HALTED";
    case RunStatus::kOutOfTime: return "OUT_OF_TIME";
    case RunStatus::kNeedsBits: return "NEEDS_BITS";
    case RunStatus::kDiverged: return "DIVERGED";
  }
  return "?";
}

RunOutcome run(const BitString& program, const BitString& condition, std::uint64_t budget) {
  std::size_t pos = 0;       // program bits read
  std::size_t cond_pos = 0;  // condition bits read
  std::uint64_t steps = 0;
  BitString out;

  auto needs_bits = [&] {
    RunOutcome o;
    o.status = RunStatus::kNeedsBits;
    o.consumed = pos;
    return o;
  };
  auto out_of_time = [&] {
    RunOutcome o;
    o.status = RunStatus::kOutOfTime;
    o.steps = steps;
    return o;
  };

  for (;;) {
    if (pos >= program.size()) return needs_bits();
    int b0 = program.bit(pos++);
    if (b0 == 0) {
      // 0b: literal
      if (pos >= program.size()) return needs_bits();
      int b = program.bit(pos++);
      if (steps + 1 > budget) return out_of_time();
      steps += 1;
      out.push_back(b);
      continue;
    }
    if (pos >= program.size()) return needs_bits();
    int b1 = program.bit(pos++);
    if (pos >= program.size()) return needs_bits();
    int b2 = program.bit(pos++);
    if (b1 == 0) {
      if (b2 == 0) {
        // 100: HALT
        if (steps + 1 > budget) return out_of_time();
        steps += 1;
        RunOutcome o;
        o.status = RunStatus::kHalted;
        o.output = std::move(out);
        o.consumed = pos;
        o.steps = steps;
        return o;
      }
      // 101: COPY
      std::uint64_t cost = static_cast<std::uint64_t>(out.size()) + 1;
      if (steps > budget || cost > budget - steps) return out_of_time();
      steps += cost;
      BitString copy = out;
      out.append(copy);
      continue;
    }
    if (b2 == 0) {
      // 110: READC; divergence on an exhausted condition is budget-free
      // (the infinite-budget outcome).
      if (cond_pos >= condition.size()) return RunOutcome{};
      if (steps + 1 > budget) return out_of_time();
      steps += 1;
      out.push_back(condition.bit(cond_pos++));
      continue;
    }
    // 111: diverge
    return RunOutcome{};
  }
}

}  // namespace sumtest_lab
