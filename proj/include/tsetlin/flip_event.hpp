#pragma once

#include <cstdint>

namespace tsetlin {

/// One include/exclude action change produced by a training step. The index
/// consumes these to stay in sync with the bank.
struct flip_event {
  std::uint32_t class_index;
  std::uint32_t clause;
  std::uint32_t literal;
  bool now_included; // true: exclude -> include, false: include -> exclude

  bool operator==(const flip_event&) const = default;
};

} // namespace tsetlin
