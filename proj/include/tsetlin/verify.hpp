#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsetlin {

struct verify_options {
  std::uint64_t seed = 1;
  std::uint32_t rounds = 50;
  /// Test hook: damage the index in this round (negative: never) to prove
  /// the checks catch corruption.
  std::int64_t corrupt_round = -1;
};

struct verify_failure {
  std::uint32_t round = 0;
  std::uint64_t seed = 0; // reproducer: rerun this round alone with it
  std::string check;
  std::string detail;

  bool operator==(const verify_failure&) const = default;
};

struct verify_summary {
  std::uint32_t rounds_run = 0;
  std::vector<verify_failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Randomized self-check: every round builds a random machine, maintains the
/// index through random flips, and checks indexed-vs-direct score equality,
/// position coherence, and rebuild equivalence. Deterministic in the options.
verify_summary run_verification(const verify_options& options);

} // namespace tsetlin
