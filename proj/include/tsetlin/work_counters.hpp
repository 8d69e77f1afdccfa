#pragma once

#include <cstdint>

namespace tsetlin {

/// Work done by an evaluation pass. On the indexed path literal_visits counts
/// clause ids fetched from inclusion lists; on the direct path it counts
/// literal inspections at the nominal full-scan rate of 2*features per clause.
struct work_counters {
  std::uint64_t literal_visits = 0;
  std::uint64_t clauses_falsified = 0; // first-time falsifications only

  work_counters& operator+=(const work_counters& other) {
    literal_visits += other.literal_visits;
    clauses_falsified += other.clauses_falsified;
    return *this;
  }
  bool operator==(const work_counters&) const = default;
};

} // namespace tsetlin
