#include "tsetlin/indexed_eval.hpp"

#include <string>

#include "tsetlin/errors.hpp"

namespace tsetlin {

indexed_scorer::indexed_scorer(const inclusion_index& index)
    : index_(index),
      stamps_(static_cast<std::size_t>(index.classes()) *
              index.clauses_per_class()),
      false_literals_(index.features()) {}

void indexed_scorer::collect_false_literals(bit_span x) {
  const std::uint32_t o = index_.features();
  if (x.size != o)
    throw shape_error("input has " + std::to_string(x.size) +
                      " features, index expects " + std::to_string(o));
  // Exactly one of (x_k, !x_k) is false, so there are always o false literals.
  for (std::uint32_t k = 0; k < o; ++k)
    false_literals_[k] = x.test(k) ? o + k : k;
}

std::int32_t indexed_scorer::falsify_class(std::uint32_t class_i,
                                           work_counters* counters) {
  const std::uint32_t n = index_.clauses_per_class();
  const std::uint32_t half = index_.half_clauses();
  const std::uint64_t e = epoch_;
  std::uint64_t* stamp = stamps_.data() + static_cast<std::size_t>(class_i) * n;

  std::uint32_t falsified_positive = 0;
  std::uint32_t falsified_negative = 0;
  std::uint64_t visits = 0;
  for (const std::uint32_t k : false_literals_) {
    const auto& lst = index_.list(class_i, k);
    visits += lst.size();
    for (const std::uint32_t j : lst) {
      std::uint64_t& s = stamp[j];
      const std::uint32_t fresh = s != e;
      s = e;
      falsified_positive += fresh & static_cast<std::uint32_t>(j < half);
      falsified_negative += fresh & static_cast<std::uint32_t>(j >= half);
    }
  }
  if (counters) {
    counters->literal_visits += visits;
    counters->clauses_falsified += falsified_positive + falsified_negative;
  }
  // Unmarked clauses are true: n/2 - falsified votes on each side.
  return static_cast<std::int32_t>(falsified_negative) -
         static_cast<std::int32_t>(falsified_positive);
}

void indexed_scorer::scores(bit_span x, std::span<std::int32_t> out,
                            work_counters* counters) {
  if (out.size() != index_.classes())
    throw shape_error("score buffer size does not match class count");
  collect_false_literals(x);
  ++epoch_;
  for (std::uint32_t i = 0; i < index_.classes(); ++i)
    out[i] = falsify_class(i, counters);
}

std::int32_t indexed_scorer::score_class(bit_span x, std::uint32_t class_i,
                                         std::uint8_t* outputs,
                                         work_counters* counters) {
  if (class_i >= index_.classes())
    throw shape_error("class index " + std::to_string(class_i) +
                      " out of range");
  collect_false_literals(x);
  ++epoch_;
  const std::int32_t score = falsify_class(class_i, counters);
  if (outputs) {
    const std::uint32_t n = index_.clauses_per_class();
    const std::uint64_t* stamp =
        stamps_.data() + static_cast<std::size_t>(class_i) * n;
    for (std::uint32_t j = 0; j < n; ++j) outputs[j] = stamp[j] != epoch_;
  }
  return score;
}

std::uint32_t indexed_scorer::predict(bit_span x, work_counters* counters) {
  if (index_.classes() < 2)
    throw shape_error("prediction needs at least two classes");
  collect_false_literals(x);
  ++epoch_;
  std::uint32_t best = 0;
  std::int32_t best_score = falsify_class(0, counters);
  for (std::uint32_t i = 1; i < index_.classes(); ++i) {
    const std::int32_t s = falsify_class(i, counters);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

std::vector<std::int32_t> indexed_class_scores(const inclusion_index& index,
                                               bit_span x,
                                               work_counters* counters) {
  indexed_scorer scorer(index);
  std::vector<std::int32_t> out(index.classes());
  scorer.scores(x, out, counters);
  return out;
}

std::uint32_t indexed_predict(const inclusion_index& index, bit_span x,
                              work_counters* counters) {
  indexed_scorer scorer(index);
  return scorer.predict(x, counters);
}

} // namespace tsetlin
