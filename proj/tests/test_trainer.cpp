#include <doctest.h>

#include "helpers.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/trainer.hpp"

using namespace tsetlin;
using namespace test_helpers;

namespace {

tm_config xor_config(std::uint32_t features) {
  tm_config cfg;
  cfg.classes = 2;
  cfg.clauses_per_class = 10;
  cfg.features = features;
  cfg.threshold = 15;
  cfg.specificity = 3.9;
  cfg.seed = 21;
  return cfg;
}

} // namespace

TEST_CASE("both backends produce bit-identical banks and accuracy curves") {
  const tm_config cfg = xor_config(6);
  const bool_dataset train = make_noisy_xor(800, 6, 0.1, 4);
  const bool_dataset test = make_noisy_xor(400, 6, 0.0, 5);

  clause_bank direct_bank(cfg);
  const training_run direct_run =
      run_training(direct_bank, cfg, train, test, 3, backend::direct);

  clause_bank indexed_bank(cfg);
  const training_run indexed_run =
      run_training(indexed_bank, cfg, train, test, 3, backend::indexed);

  REQUIRE(direct_run.epochs.size() == indexed_run.epochs.size());
  for (std::size_t e = 0; e < direct_run.epochs.size(); ++e)
    CHECK(direct_run.epochs[e].test_accuracy ==
          indexed_run.epochs[e].test_accuracy);
  CHECK(direct_bank == indexed_bank);
}

TEST_CASE("zero epochs only times inference and leaves the bank alone") {
  const tm_config cfg = xor_config(5);
  const bool_dataset data = make_noisy_xor(200, 5, 0.1, 6);
  clause_bank bank(cfg);
  const clause_bank before = bank;
  const training_run run =
      run_training(bank, cfg, data, data, 0, backend::indexed);
  CHECK(run.epochs.empty());
  CHECK(run.inference_seconds >= 0.0);
  CHECK(bank == before);
}

TEST_CASE("direct and indexed accuracy agree on a trained bank") {
  const tm_config cfg = xor_config(6);
  const bool_dataset train = make_noisy_xor(500, 6, 0.1, 7);
  const bool_dataset test = make_noisy_xor(300, 6, 0.0, 8);
  clause_bank bank(cfg);
  run_training(bank, cfg, train, test, 2, backend::direct);
  const inclusion_index index(bank);
  CHECK(accuracy(bank, test) == accuracy(index, test));
}

TEST_CASE("training rejects mismatched datasets") {
  const tm_config cfg = xor_config(6);
  const bool_dataset train = make_noisy_xor(50, 6, 0.1, 9);
  const bool_dataset narrow = make_noisy_xor(50, 4, 0.1, 9);
  clause_bank bank(cfg);
  CHECK_THROWS_AS(
      run_training(bank, cfg, narrow, narrow, 1, backend::direct),
      shape_error);
  CHECK_THROWS_AS(run_training(bank, cfg, train, narrow, 1, backend::direct),
                  shape_error);
}

TEST_CASE("work counters follow the backend's accounting") {
  const tm_config cfg = xor_config(5);
  const bool_dataset data = make_noisy_xor(100, 5, 0.1, 10);
  clause_bank bank(cfg);
  const training_run direct_run =
      run_training(bank, cfg, data, data, 0, backend::direct);
  // full scan: examples * classes * clauses * literals
  CHECK(direct_run.inference_work.literal_visits ==
        100ull * 2 * 10 * 10);

  const training_run indexed_run =
      run_training(bank, cfg, data, data, 0, backend::indexed);
  CHECK(indexed_run.inference_work.literal_visits == 0); // fresh bank: empty
}
