#pragma once

#include <cstdint>

namespace tsetlin {

/// A Tsetlin automaton is one byte of state in [1, 2*half_range]. Values above
/// half_range mean the literal is included in its clause.
enum class ta_signal : std::uint8_t { reward, penalty };

constexpr bool ta_includes(std::uint8_t value, std::uint8_t half_range) {
  return value > half_range;
}

struct ta_result {
  std::uint8_t value;
  bool flipped; // include/exclude action changed
};

/// State transition. On the include side a reward deepens the state (capped at
/// 2*half_range) and a penalty backs it off; on the exclude side a reward
/// deepens toward 1 and a penalty moves toward inclusion. Total on all valid
/// states.
constexpr ta_result ta_apply(std::uint8_t value, std::uint8_t half_range,
                             ta_signal signal) {
  const std::uint8_t top = static_cast<std::uint8_t>(2 * half_range);
  const bool was_included = ta_includes(value, half_range);
  std::uint8_t next = value;
  if (was_included) {
    if (signal == ta_signal::reward) {
      if (value < top) next = static_cast<std::uint8_t>(value + 1);
    } else {
      next = static_cast<std::uint8_t>(value - 1);
    }
  } else {
    if (signal == ta_signal::reward) {
      if (value > 1) next = static_cast<std::uint8_t>(value - 1);
    } else {
      next = static_cast<std::uint8_t>(value + 1);
    }
  }
  return {next, ta_includes(next, half_range) != was_included};
}

} // namespace tsetlin
