#pragma once

#include <cstdint>

namespace tsetlin {

/// Hyperparameters and geometry of one machine.
///
/// `clauses_per_class` is split half/half by polarity: clause ids below
/// clauses_per_class/2 vote for their class, the rest vote against it.
struct tm_config {
  std::uint32_t classes = 2;           // m
  std::uint32_t clauses_per_class = 10; // n, even
  std::uint32_t features = 1;          // o; literals are 2*o
  std::uint8_t half_range = 100;       // N; TA states live in [1, 2N]
  std::uint32_t threshold = 15;        // T; clamps vote sums during training
  double specificity = 3.9;            // s; reward/penalty split 1/s vs 1-1/s
  std::uint64_t seed = 1;
  bool boost_true_positive = false;

  std::uint32_t literals() const { return 2 * features; }
  std::uint32_t half_clauses() const { return clauses_per_class / 2; }

  /// Throws shape_error naming the first violated constraint.
  void validate() const;
};

} // namespace tsetlin
