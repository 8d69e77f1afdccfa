#include "tsetlin/feedback.hpp"

#include <algorithm>

#include "tsetlin/errors.hpp"

namespace tsetlin {

std::uint32_t sample_negative_class(std::uint32_t classes, std::uint32_t label,
                                    rng& gen) {
  if (classes < 2)
    throw shape_error("negative-class sampling needs at least two classes");
  const std::uint32_t r = gen.below(classes - 1);
  return r + (r >= label ? 1 : 0);
}

namespace {

enum class push : std::uint8_t { toward_include, toward_exclude };

// A push toward one action side maps to reward or penalty depending on the
// automaton's current side.
inline void push_ta(clause_bank& bank, std::uint32_t i, std::uint32_t j,
                    std::uint32_t k, push direction,
                    std::vector<flip_event>& events) {
  const std::uint8_t value = bank.state(i, j, k);
  const bool included = ta_includes(value, bank.half_range());
  const ta_signal signal =
      (direction == push::toward_include) == included ? ta_signal::reward
                                                      : ta_signal::penalty;
  const ta_result r = ta_apply(value, bank.half_range(), signal);
  bank.set_state(i, j, k, r.value);
  if (r.flipped) events.push_back({i, j, k, !included});
}

inline bool literal_true(bit_span x, std::uint32_t k, std::uint32_t features) {
  return k < features ? x.test(k) : !x.test(k - features);
}

// Combats false negatives: reinforce clauses toward matching the input.
void type_one(clause_bank& bank, const tm_config& cfg, std::uint32_t i,
              std::uint32_t j, std::uint8_t output, bit_span x, rng& gen,
              std::vector<flip_event>& events) {
  const double invs = 1.0 / cfg.specificity;
  const std::uint32_t lits = bank.literals();
  if (output) {
    for (std::uint32_t k = 0; k < lits; ++k) {
      if (literal_true(x, k, bank.features())) {
        if (cfg.boost_true_positive || gen.bernoulli(1.0 - invs))
          push_ta(bank, i, j, k, push::toward_include, events);
      } else if (gen.bernoulli(invs)) {
        push_ta(bank, i, j, k, push::toward_exclude, events);
      }
    }
  } else {
    for (std::uint32_t k = 0; k < lits; ++k) {
      if (gen.bernoulli(invs))
        push_ta(bank, i, j, k, push::toward_exclude, events);
    }
  }
}

// Combats false positives: push excluded false literals into clauses that
// wrongly fired, so they falsify next time.
void type_two(clause_bank& bank, std::uint32_t i, std::uint32_t j,
              std::uint8_t output, bit_span x,
              std::vector<flip_event>& events) {
  if (!output) return;
  const std::uint32_t lits = bank.literals();
  for (std::uint32_t k = 0; k < lits; ++k) {
    if (!literal_true(x, k, bank.features()) && !bank.includes(i, j, k))
      push_ta(bank, i, j, k, push::toward_include, events);
  }
}

std::int32_t clamp_votes(std::int32_t v, std::uint32_t threshold) {
  const auto t = static_cast<std::int32_t>(threshold);
  return std::clamp(v, -t, t);
}

} // namespace

void apply_feedback(clause_bank& bank, const tm_config& cfg, bit_span x,
                    std::uint32_t target, std::int32_t target_score,
                    std::span<const std::uint8_t> target_outputs,
                    std::uint32_t negative, std::int32_t negative_score,
                    std::span<const std::uint8_t> negative_outputs, rng& gen,
                    std::vector<flip_event>& events) {
  const std::uint32_t n = bank.clauses_per_class();
  const std::uint32_t half = bank.half_clauses();
  if (target_outputs.size() != n || negative_outputs.size() != n)
    throw shape_error("clause output buffers must cover every clause");

  const double two_t = 2.0 * static_cast<double>(cfg.threshold);
  const double p_target =
      (static_cast<double>(cfg.threshold) -
       clamp_votes(target_score, cfg.threshold)) /
      two_t;
  const double p_negative =
      (static_cast<double>(cfg.threshold) +
       clamp_votes(negative_score, cfg.threshold)) /
      two_t;

  // All activation draws happen before any state changes.
  std::vector<std::uint8_t> target_active(n), negative_active(n);
  for (std::uint32_t j = 0; j < n; ++j)
    target_active[j] = gen.bernoulli(p_target);
  for (std::uint32_t j = 0; j < n; ++j)
    negative_active[j] = gen.bernoulli(p_negative);

  for (std::uint32_t j = 0; j < n; ++j) {
    if (!target_active[j]) continue;
    if (j < half)
      type_one(bank, cfg, target, j, target_outputs[j], x, gen, events);
    else
      type_two(bank, target, j, target_outputs[j], x, events);
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!negative_active[j]) continue;
    if (j < half)
      type_two(bank, negative, j, negative_outputs[j], x, events);
    else
      type_one(bank, cfg, negative, j, negative_outputs[j], x, gen, events);
  }
}

void train_step(clause_bank& bank, const tm_config& cfg, direct_scorer& scorer,
                bit_span x, std::uint32_t label, rng& gen,
                std::vector<flip_event>& events) {
  events.clear();
  if (label >= bank.classes()) throw shape_error("label out of range");
  const std::uint32_t q = sample_negative_class(bank.classes(), label, gen);

  const std::uint32_t n = bank.clauses_per_class();
  std::vector<std::uint8_t> target_outputs(n), negative_outputs(n);
  const std::int32_t vy = scorer.score_class(x, label, target_outputs.data());
  const std::int32_t vq = scorer.score_class(x, q, negative_outputs.data());
  apply_feedback(bank, cfg, x, label, vy, target_outputs, q, vq,
                 negative_outputs, gen, events);
}

std::vector<flip_event> train_step(clause_bank& bank, const tm_config& cfg,
                                   bit_span x, std::uint32_t label, rng& gen) {
  direct_scorer scorer(bank);
  std::vector<flip_event> events;
  train_step(bank, cfg, scorer, x, label, gen, events);
  return events;
}

} // namespace tsetlin
