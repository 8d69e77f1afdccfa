#pragma once

#include <cstdint>
#include <limits>

namespace tsetlin {

/// Byte-cost model of a machine and its index: one byte per automaton
/// (2*m*n*o of them) and two index tables of the same entry count at two
/// bytes each, so the index doubles the machine and the total triples it.
struct memory_estimate {
  std::uint64_t tm_bytes = 0;
  std::uint64_t index_bytes = 0;
  std::uint64_t total_bytes = 0;
  bool saturated = false; // a product overflowed; values are clamped

  bool operator==(const memory_estimate&) const = default;
};

namespace detail {
inline std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b, bool& sat) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    sat = true;
    return std::numeric_limits<std::uint64_t>::max();
  }
  return r;
}
} // namespace detail

inline memory_estimate estimate_memory(std::uint64_t classes,
                                       std::uint64_t clauses_per_class,
                                       std::uint64_t features) {
  memory_estimate e;
  std::uint64_t tm = detail::mul_sat(2, classes, e.saturated);
  tm = detail::mul_sat(tm, clauses_per_class, e.saturated);
  tm = detail::mul_sat(tm, features, e.saturated);
  e.tm_bytes = tm;
  e.index_bytes = detail::mul_sat(tm, 2, e.saturated);
  e.total_bytes = detail::mul_sat(tm, 3, e.saturated);
  return e;
}

} // namespace tsetlin
