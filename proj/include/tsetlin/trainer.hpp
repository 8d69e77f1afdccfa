#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsetlin/clause_bank.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/dataset.hpp"
#include "tsetlin/inclusion_index.hpp"
#include "tsetlin/indexed_eval.hpp"
#include "tsetlin/work_counters.hpp"

namespace tsetlin {

enum class backend : std::uint8_t { direct, indexed };

std::string to_string(backend b);
std::optional<backend> backend_from_string(const std::string& name);

struct epoch_metrics {
  double train_seconds = 0.0;
  double test_seconds = 0.0;
  double test_accuracy = 0.0;
  work_counters train_work;
  work_counters test_work;
};

struct training_run {
  std::vector<epoch_metrics> epochs;
  work_counters inference_work; // epochs == 0 only: the timing-only pass
  double inference_seconds = 0.0;
};

/// Trains `bank` in place for `epochs` passes over `train` in dataset order,
/// then times and scores a full pass over `test` after each epoch. With
/// epochs == 0 only the inference pass runs (no state change).
///
/// The clause-output backend is an evaluation strategy only: with the same
/// config seed the direct and indexed runs draw identical randomness and land
/// on bit-identical banks. The indexed run keeps an inclusion index in sync
/// through the flip events of every step.
training_run run_training(clause_bank& bank, const tm_config& cfg,
                          const bool_dataset& train, const bool_dataset& test,
                          std::uint32_t epochs, backend kind);

/// Fraction of examples whose prediction matches the label.
double accuracy(const clause_bank& bank, const bool_dataset& ds);
double accuracy(const inclusion_index& index, const bool_dataset& ds);

} // namespace tsetlin
