#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsetlin/bits.hpp"
#include "tsetlin/clause_bank.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/flip_event.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

/// One draw; returns a class != label, uniform over the rest.
std::uint32_t sample_negative_class(std::uint32_t classes, std::uint32_t label,
                                    rng& gen);

/// Shared update core. Callers supply the clause outputs of the target and the
/// sampled negative class under x (however they were computed); the update and
/// its randomness are identical for every backend, which is what makes
/// training trajectories backend-independent under a shared seed.
///
/// Draw order is part of the contract: one activation draw per clause of the
/// target class in id order, then per clause of the negative class; then for
/// each activated clause, feedback draws in (clause id, literal) order, one
/// draw per probabilistic table cell and none for deterministic cells.
///
/// Feedback tables: the target class applies type I to positive clauses and
/// type II to negative ones, the negative class the reverse. Type I with
/// clause output 1 pushes true literals toward inclusion with probability
/// (s-1)/s (always, if boost_true_positive) and false literals toward
/// exclusion with probability 1/s; with clause output 0 it pushes every
/// automaton toward exclusion with probability 1/s. Type II acts only on
/// clauses with output 1, deterministically pushing excluded false literals
/// toward inclusion.
///
/// Activation probabilities use vote sums clamped to [-T, T]: (T - v)/(2T)
/// for the target class and (T + v)/(2T) for the negative class.
void apply_feedback(clause_bank& bank, const tm_config& cfg, bit_span x,
                    std::uint32_t target, std::int32_t target_score,
                    std::span<const std::uint8_t> target_outputs,
                    std::uint32_t negative, std::int32_t negative_score,
                    std::span<const std::uint8_t> negative_outputs, rng& gen,
                    std::vector<flip_event>& events);

/// One full training step on (x, label) with clause outputs computed by
/// direct evaluation. Clears and fills `events` with every include/exclude
/// flip so the caller can keep an inclusion index in sync.
void train_step(clause_bank& bank, const tm_config& cfg, direct_scorer& scorer,
                bit_span x, std::uint32_t label, rng& gen,
                std::vector<flip_event>& events);

/// Convenience overload returning the flips.
std::vector<flip_event> train_step(clause_bank& bank, const tm_config& cfg,
                                   bit_span x, std::uint32_t label, rng& gen);

} // namespace tsetlin
