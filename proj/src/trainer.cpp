#include "tsetlin/trainer.hpp"

#include <chrono>

#include "tsetlin/errors.hpp"
#include "tsetlin/feedback.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

std::string to_string(backend b) {
  return b == backend::direct ? "direct" : "indexed";
}

std::optional<backend> backend_from_string(const std::string& name) {
  if (name == "direct") return backend::direct;
  if (name == "indexed") return backend::indexed;
  return std::nullopt;
}

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
  return std::chrono::duration<double>(clock::now() - start).count();
}

void check_dataset(const clause_bank& bank, const bool_dataset& ds,
                   const char* which) {
  if (ds.features() != bank.features())
    throw shape_error(std::string(which) + " dataset width " +
                      std::to_string(ds.features()) +
                      " does not match bank features " +
                      std::to_string(bank.features()));
  if (ds.classes() != bank.classes())
    throw shape_error(std::string(which) + " dataset classes " +
                      std::to_string(ds.classes()) +
                      " do not match bank classes " +
                      std::to_string(bank.classes()));
}

// One training pass, direct clause evaluation.
void train_epoch_direct(clause_bank& bank, const tm_config& cfg,
                        const bool_dataset& train, rng& gen,
                        work_counters& work) {
  direct_scorer scorer(bank);
  const std::uint32_t n = bank.clauses_per_class();
  std::vector<std::uint8_t> target_outputs(n), negative_outputs(n);
  std::vector<flip_event> events;
  for (std::uint32_t r = 0; r < train.count(); ++r) {
    const bit_span x = train.row(r);
    const auto label = static_cast<std::uint32_t>(train.label(r));
    const std::uint32_t q = sample_negative_class(bank.classes(), label, gen);
    const std::int32_t vy =
        scorer.score_class(x, label, target_outputs.data(), &work);
    const std::int32_t vq =
        scorer.score_class(x, q, negative_outputs.data(), &work);
    events.clear();
    apply_feedback(bank, cfg, x, label, vy, target_outputs, q, vq,
                   negative_outputs, gen, events);
  }
}

// One training pass through the index; flips keep it synchronized.
void train_epoch_indexed(clause_bank& bank, const tm_config& cfg,
                         inclusion_index& index, indexed_scorer& scorer,
                         const bool_dataset& train, rng& gen,
                         work_counters& work) {
  const std::uint32_t n = bank.clauses_per_class();
  std::vector<std::uint8_t> target_outputs(n), negative_outputs(n);
  std::vector<flip_event> events;
  for (std::uint32_t r = 0; r < train.count(); ++r) {
    const bit_span x = train.row(r);
    const auto label = static_cast<std::uint32_t>(train.label(r));
    const std::uint32_t q = sample_negative_class(bank.classes(), label, gen);
    const std::int32_t vy =
        scorer.score_class(x, label, target_outputs.data(), &work);
    const std::int32_t vq =
        scorer.score_class(x, q, negative_outputs.data(), &work);
    events.clear();
    apply_feedback(bank, cfg, x, label, vy, target_outputs, q, vq,
                   negative_outputs, gen, events);
    index.apply(events);
  }
}

template <typename Scorer>
double test_pass(Scorer& scorer, const bool_dataset& test,
                 work_counters& work) {
  std::uint32_t correct = 0;
  for (std::uint32_t r = 0; r < test.count(); ++r) {
    if (scorer.predict(test.row(r), &work) ==
        static_cast<std::uint32_t>(test.label(r)))
      ++correct;
  }
  return test.count() == 0 ? 0.0
                           : static_cast<double>(correct) / test.count();
}

} // namespace

training_run run_training(clause_bank& bank, const tm_config& cfg,
                          const bool_dataset& train, const bool_dataset& test,
                          std::uint32_t epochs, backend kind) {
  cfg.validate();
  check_dataset(bank, train, "train");
  check_dataset(bank, test, "test");
  if (bank.classes() < 2)
    throw shape_error("training needs at least two classes");

  training_run result;
  rng gen(cfg.seed);

  if (kind == backend::direct) {
    direct_scorer scorer(bank);
    if (epochs == 0) {
      const auto t0 = clock::now();
      test_pass(scorer, test, result.inference_work);
      result.inference_seconds = seconds_since(t0);
      return result;
    }
    for (std::uint32_t e = 0; e < epochs; ++e) {
      epoch_metrics m;
      auto t0 = clock::now();
      train_epoch_direct(bank, cfg, train, gen, m.train_work);
      m.train_seconds = seconds_since(t0);
      t0 = clock::now();
      m.test_accuracy = test_pass(scorer, test, m.test_work);
      m.test_seconds = seconds_since(t0);
      result.epochs.push_back(m);
    }
    return result;
  }

  inclusion_index index(bank);
  indexed_scorer scorer(index);
  if (epochs == 0) {
    const auto t0 = clock::now();
    test_pass(scorer, test, result.inference_work);
    result.inference_seconds = seconds_since(t0);
    return result;
  }
  for (std::uint32_t e = 0; e < epochs; ++e) {
    epoch_metrics m;
    auto t0 = clock::now();
    train_epoch_indexed(bank, cfg, index, scorer, train, gen, m.train_work);
    m.train_seconds = seconds_since(t0);
    t0 = clock::now();
    m.test_accuracy = test_pass(scorer, test, m.test_work);
    m.test_seconds = seconds_since(t0);
    result.epochs.push_back(m);
  }
  return result;
}

double accuracy(const clause_bank& bank, const bool_dataset& ds) {
  direct_scorer scorer(bank);
  work_counters scratch;
  return test_pass(scorer, ds, scratch);
}

double accuracy(const inclusion_index& index, const bool_dataset& ds) {
  indexed_scorer scorer(index);
  work_counters scratch;
  return test_pass(scorer, ds, scratch);
}

} // namespace tsetlin
