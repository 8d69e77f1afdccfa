#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsetlin/dataset.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

enum class backend_choice : std::uint8_t { direct, indexed, both };

std::optional<backend_choice> backend_choice_from_string(
    const std::string& name);

/// One dataset under benchmark. Paths name dataset files; the reserved id
/// "synthetic-xor" generates the built-in noisy-xor problem instead.
struct experiment_dataset {
  std::string id;
  std::string train_path;
  std::string test_path; // empty: time inference over the training split
};

/// A sweep: every dataset crossed with every clause count, run per backend.
struct experiment {
  std::vector<experiment_dataset> datasets;
  std::vector<std::uint32_t> clause_grid;
  std::uint32_t epochs = 1;
  std::uint32_t repetitions = 1;
  backend_choice backends = backend_choice::both;
  std::uint64_t seed = 1;
  std::uint32_t threshold = 0; // 0: 15 for synthetic data, clauses/25 otherwise
  double specificity = 3.9;
  bool boost_true_positive = false;
  std::uint32_t synthetic_features = 12;
  std::uint32_t synthetic_examples = 5000;

  void validate() const;
};

/// One report row; exactly the columns of the CSV format.
struct bench_record {
  std::string dataset;
  std::uint32_t features = 0;
  std::uint32_t clauses = 0;
  std::string backend;
  std::string phase; // "train" or "test"
  double epoch_s_mean = 0.0;
  double epoch_s_std = 0.0;
  std::uint64_t literal_visits = 0; // mean per epoch
  std::optional<double> speedup; // direct/indexed; set once both backends ran

  bool operator==(const bench_record&) const = default;
};

struct bench_report {
  std::vector<bench_record> records;
  std::uint64_t seed = 0;
  std::string host;
  std::string generator;

  bool operator==(const bench_report&) const = default;
};

/// Runs every cell sequentially (one at a time, for timing fidelity). Both
/// backends of a cell use the same derived seed and data order, so their
/// model trajectories are identical and timing differences isolate the
/// evaluation strategy.
bench_report run_experiment(const experiment& spec);

std::string report_csv(const bench_report& report);

/// Speedup tables, one per dataset: rows are clause counts, one Train/Test
/// column pair per feature width.
std::string report_markdown(const bench_report& report);

/// format is "csv" or "markdown".
void emit_report(const bench_report& report, const std::string& format,
                 const std::string& path);

/// Inverse of report_csv, for report tooling and round-trip checks.
bench_report parse_report_csv(const std::string& text);

} // namespace tsetlin
