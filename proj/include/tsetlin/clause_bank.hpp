#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsetlin/automaton.hpp"
#include "tsetlin/bits.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/work_counters.hpp"

namespace tsetlin {

/// TA states for every clause of every class, laid out row-major as
/// (class, clause, literal). Literal k < features reads feature k directly,
/// literal k >= features reads the negation of feature k - features.
class clause_bank {
public:
  clause_bank(std::uint32_t classes, std::uint32_t clauses_per_class,
              std::uint32_t features, std::uint8_t half_range);
  explicit clause_bank(const tm_config& cfg)
      : clause_bank(cfg.classes, cfg.clauses_per_class, cfg.features,
                    cfg.half_range) {}

  std::uint32_t classes() const { return classes_; }
  std::uint32_t clauses_per_class() const { return clauses_; }
  std::uint32_t half_clauses() const { return clauses_ / 2; }
  std::uint32_t features() const { return features_; }
  std::uint32_t literals() const { return 2 * features_; }
  std::uint8_t half_range() const { return half_range_; }

  std::uint8_t state(std::uint32_t class_i, std::uint32_t clause_j,
                     std::uint32_t literal_k) const {
    return states_[offset(class_i, clause_j, literal_k)];
  }
  void set_state(std::uint32_t class_i, std::uint32_t clause_j,
                 std::uint32_t literal_k, std::uint8_t value) {
    states_[offset(class_i, clause_j, literal_k)] = value;
  }

  bool includes(std::uint32_t class_i, std::uint32_t clause_j,
                std::uint32_t literal_k) const {
    return ta_includes(state(class_i, clause_j, literal_k), half_range_);
  }

  std::span<const std::uint8_t> team(std::uint32_t class_i,
                                     std::uint32_t clause_j) const {
    return {states_.data() + offset(class_i, clause_j, 0), literals()};
  }
  std::span<std::uint8_t> team(std::uint32_t class_i, std::uint32_t clause_j) {
    return {states_.data() + offset(class_i, clause_j, 0), literals()};
  }

  std::span<const std::uint8_t> raw_states() const { return states_; }
  std::span<std::uint8_t> raw_states() { return states_; }

  bool operator==(const clause_bank&) const = default;

private:
  std::size_t offset(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return (static_cast<std::size_t>(i) * clauses_ + j) * literals() + k;
  }

  std::uint32_t classes_;
  std::uint32_t clauses_;
  std::uint32_t features_;
  std::uint8_t half_range_;
  std::vector<std::uint8_t> states_;
};

/// Truth value of one clause: 1 iff every included literal holds under x.
/// A clause with no included literals is 1, in training and inference alike.
bool evaluate_clause(std::span<const std::uint8_t> team,
                     std::uint8_t half_range, bit_span x);
bool evaluate_clause(const clause_bank& bank, std::uint32_t class_i,
                     std::uint32_t clause_j, bit_span x);

/// Votes for class_i: positive-polarity clause outputs minus negative ones.
std::int32_t class_score(const clause_bank& bank, std::uint32_t class_i,
                         bit_span x);

/// Single-class machines only (classes() == 1): 1 iff the vote sum is >= 0.
int predict_binary(const clause_bank& bank, bit_span x);

/// Argmax of class scores; ties go to the lowest class index.
std::uint32_t predict_multiclass(const clause_bank& bank, bit_span x);

/// Batch evaluation of a frozen bank. Holds per-example scratch so the hot
/// loops do no allocation; one instance per thread.
///
/// Work accounting on this path charges a full team scan (2*features literal
/// inspections) per clause, the nominal cost of direct evaluation; the
/// evaluator itself stops a clause at its first false included literal.
class direct_scorer {
public:
  explicit direct_scorer(const clause_bank& bank);

  /// Score of one class; optionally fills outputs[j] with each clause output.
  std::int32_t score_class(bit_span x, std::uint32_t class_i,
                           std::uint8_t* outputs = nullptr,
                           work_counters* counters = nullptr);

  /// Scores of all classes.
  void scores(bit_span x, std::span<std::int32_t> out,
              work_counters* counters = nullptr);

  /// Argmax with lowest-index tie-break.
  std::uint32_t predict(bit_span x, work_counters* counters = nullptr);

  const clause_bank& bank() const { return bank_; }

private:
  void prepare(bit_span x);
  std::int32_t score_prepared(std::uint32_t class_i, std::uint8_t* outputs,
                              work_counters* counters);

  const clause_bank& bank_;
  std::vector<std::uint8_t> false_literal_; // per literal: is it false under x
};

} // namespace tsetlin
