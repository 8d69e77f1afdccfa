#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsetlin/bits.hpp"
#include "tsetlin/inclusion_index.hpp"
#include "tsetlin/work_counters.hpp"

namespace tsetlin {

/// Evaluates clauses through the inclusion index by falsification: walk the
/// lists of the false literals, mark each clause the first time it appears,
/// and count marks per polarity. Every unmarked clause is true, so the class
/// score is (falsified negative) - (falsified positive).
///
/// Duplicate suppression uses a generation counter per clause instead of a
/// cleared bitmap, keeping per-call cost proportional to the clauses actually
/// touched. The scratch (stamps) is private to this scorer; give each reader
/// thread its own instance over a frozen index.
class indexed_scorer {
public:
  explicit indexed_scorer(const inclusion_index& index);

  /// Scores of all classes in one falsification pass.
  void scores(bit_span x, std::span<std::int32_t> out,
              work_counters* counters = nullptr);

  /// Score of a single class; optionally fills outputs[j] with clause truth
  /// values, which is how training obtains them on this backend.
  std::int32_t score_class(bit_span x, std::uint32_t class_i,
                           std::uint8_t* outputs = nullptr,
                           work_counters* counters = nullptr);

  /// Argmax with lowest-index tie-break.
  std::uint32_t predict(bit_span x, work_counters* counters = nullptr);

  const inclusion_index& index() const { return index_; }

private:
  void collect_false_literals(bit_span x);
  // Marks falsified clauses of one class; returns its score.
  std::int32_t falsify_class(std::uint32_t class_i, work_counters* counters);

  const inclusion_index& index_;
  std::vector<std::uint64_t> stamps_; // per (class, clause)
  std::uint64_t epoch_ = 0;
  std::vector<std::uint32_t> false_literals_; // exactly one per feature
};

/// Scores computed through the index; equals the direct per-class scores for
/// any bank/index pair that satisfies the membership invariant.
std::vector<std::int32_t> indexed_class_scores(const inclusion_index& index,
                                               bit_span x,
                                               work_counters* counters
                                               = nullptr);

/// Argmax of indexed_class_scores with lowest-index tie-break.
std::uint32_t indexed_predict(const inclusion_index& index, bit_span x,
                              work_counters* counters = nullptr);

} // namespace tsetlin
