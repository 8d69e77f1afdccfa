// Command-line front end: train and evaluate machines, benchmark the two
// clause-evaluation backends, self-verify their equivalence, and binarize
// raw datasets. Every flag can also come from a key=value config file
// (--config) or from the environment with the TM_ prefix.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tsetlin/bench.hpp"
#include "tsetlin/dataset.hpp"
#include "tsetlin/dataset_io.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/feedback.hpp"
#include "tsetlin/idx_io.hpp"
#include "tsetlin/model_io.hpp"
#include "tsetlin/trainer.hpp"
#include "tsetlin/verify.hpp"

namespace {

using namespace tsetlin;

void add_config_support(CLI::App& app) {
  app.set_config("--config", "", "Read options from a key=value file");
}

CLI::Option* with_env(CLI::Option* opt, const std::string& name) {
  return opt->envname("TM_" + name);
}

int run_train(const std::string& train_path, const std::string& test_path,
              std::uint32_t clauses, std::uint32_t epochs,
              const std::string& backend_name, std::uint64_t seed,
              std::uint32_t threshold, double specificity, bool boost,
              const std::string& out_path) {
  const auto kind = backend_from_string(backend_name);
  if (!kind) {
    std::cerr << "unknown backend: " << backend_name << "\n";
    return 2;
  }
  const bool_dataset train = load_dataset(train_path);
  const bool_dataset test =
      test_path.empty() ? train : load_dataset(test_path);

  tm_config cfg;
  cfg.classes = train.classes();
  cfg.clauses_per_class = clauses;
  cfg.features = train.features();
  cfg.threshold = threshold > 0 ? threshold
                                : std::max<std::uint32_t>(1, clauses / 25);
  cfg.specificity = specificity;
  cfg.seed = seed;
  cfg.boost_true_positive = boost;
  cfg.validate();

  clause_bank bank(cfg);
  const training_run run =
      run_training(bank, cfg, train, test, epochs, *kind);
  for (std::size_t e = 0; e < run.epochs.size(); ++e) {
    const epoch_metrics& m = run.epochs[e];
    std::printf("epoch %3zu  train %.3fs  test %.3fs  accuracy %.4f\n", e + 1,
                m.train_seconds, m.test_seconds, m.test_accuracy);
  }
  if (!out_path.empty()) {
    save_model(bank, out_path);
    std::printf("model written to %s\n", out_path.c_str());
  }
  return 0;
}

int run_bench(const std::vector<std::string>& dataset_paths,
              const std::string& test_path,
              const std::vector<std::uint32_t>& clause_grid,
              std::uint32_t epochs, std::uint32_t reps,
              const std::string& backend_name, std::uint64_t seed,
              std::uint32_t threshold, double specificity,
              std::uint32_t features, const std::string& out_path,
              const std::string& format) {
  const auto choice = backend_choice_from_string(backend_name);
  if (!choice) {
    std::cerr << "unknown backend choice: " << backend_name << "\n";
    return 2;
  }
  experiment spec;
  for (const std::string& path : dataset_paths) {
    experiment_dataset d;
    d.train_path = path;
    d.id = path == "synthetic-xor"
               ? path
               : std::filesystem::path(path).stem().string();
    d.test_path = path == "synthetic-xor" ? "" : test_path;
    spec.datasets.push_back(std::move(d));
  }
  spec.clause_grid = clause_grid;
  spec.epochs = epochs;
  spec.repetitions = reps;
  spec.backends = *choice;
  spec.seed = seed;
  spec.threshold = threshold;
  spec.specificity = specificity;
  spec.synthetic_features = features > 0 ? features : 12;

  const bench_report report = run_experiment(spec);
  if (out_path.empty()) {
    std::cout << (format == "markdown" ? report_markdown(report)
                                       : report_csv(report));
  } else {
    emit_report(report, format, out_path);
    std::printf("report written to %s\n", out_path.c_str());
  }
  return 0;
}

int run_verify(std::uint64_t seed, std::uint32_t rounds,
               std::int64_t corrupt_round) {
  verify_options options;
  options.seed = seed;
  options.rounds = rounds;
  options.corrupt_round = corrupt_round;
  const verify_summary summary = run_verification(options);
  for (const verify_failure& f : summary.failures)
    std::printf("FAIL round %u (seed %llu) %s: %s\n", f.round,
                static_cast<unsigned long long>(f.seed), f.check.c_str(),
                f.detail.c_str());
  std::printf("%u rounds, %zu failures\n", summary.rounds_run,
              summary.failures.size());
  return summary.passed() ? 0 : 1;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// One document per line: "<label>\t<text>".
void parse_labeled_text(const std::vector<std::string>& lines,
                        std::vector<std::string>& docs,
                        std::vector<std::int32_t>& labels) {
  for (const std::string& line : lines) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw format_error("expected '<label>\\t<text>' line, got: " + line);
    labels.push_back(std::stoi(line.substr(0, tab)));
    docs.push_back(line.substr(tab + 1));
  }
}

int run_binarize(const std::string& kind, const std::string& dataset_path,
                 const std::string& labels_path, std::uint32_t bits,
                 std::uint32_t features, const std::string& vocab_in,
                 const std::string& vocab_out, const std::string& out_path) {
  if (kind == "idx") {
    if (labels_path.empty()) {
      std::cerr << "binarize --kind idx needs --labels\n";
      return 2;
    }
    const byte_matrix images = load_idx_images(dataset_path);
    const std::vector<std::uint8_t> raw = load_idx_labels(labels_path);
    if (raw.size() != images.rows) {
      std::cerr << "image/label counts differ\n";
      return 2;
    }
    std::vector<std::int32_t> labels(raw.begin(), raw.end());
    std::int32_t top = 0;
    for (const std::int32_t l : labels) top = std::max(top, l);
    bool_dataset ds = binarize_images(images, labels,
                                      static_cast<std::uint32_t>(top) + 1,
                                      binarize_spec::standard(bits));
    ds.prov.source = dataset_path;
    save_dataset(ds, out_path);
    std::printf("%u examples, %u features -> %s\n", ds.count(), ds.features(),
                out_path.c_str());
    return 0;
  }
  if (kind == "text") {
    std::vector<std::string> docs;
    std::vector<std::int32_t> labels;
    parse_labeled_text(read_lines(dataset_path), docs, labels);
    std::vector<std::string> vocab;
    if (!vocab_in.empty()) {
      vocab = read_lines(vocab_in);
      while (!vocab.empty() && vocab.back().empty()) vocab.pop_back();
    } else {
      vocab = build_vocabulary(docs, features);
      if (!vocab_out.empty()) {
        std::ofstream out(vocab_out, std::ios::trunc);
        for (const std::string& tok : vocab) out << tok << "\n";
      }
    }
    std::int32_t top = 0;
    for (const std::int32_t l : labels) top = std::max(top, l);
    bool_dataset ds =
        vectorize_text(docs, labels, static_cast<std::uint32_t>(top) + 1,
                       vocab);
    ds.prov.source = dataset_path;
    save_dataset(ds, out_path);
    std::printf("%u examples, %u features -> %s\n", ds.count(), ds.features(),
                out_path.c_str());
    return 0;
  }
  std::cerr << "unknown binarize kind: " << kind << " (use idx or text)\n";
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsetlin machine trainer and indexed-evaluation benchmark"};
  app.require_subcommand(1);
  add_config_support(app);

  // train
  auto* train = app.add_subcommand("train", "Train a machine on a dataset");
  std::string train_dataset, train_test, train_backend = "indexed";
  std::string train_out;
  std::uint32_t train_clauses = 100, train_epochs = 10, train_threshold = 0;
  std::uint64_t train_seed = 1;
  double train_s = 3.9;
  bool train_boost = false;
  with_env(train->add_option("--dataset", train_dataset, "Training dataset")
               ->required(),
           "DATASET");
  with_env(train->add_option("--test-dataset", train_test, "Held-out split"),
           "TEST_DATASET");
  with_env(train->add_option("--clauses", train_clauses, "Clauses per class"),
           "CLAUSES");
  with_env(train->add_option("--epochs", train_epochs, "Training epochs"),
           "EPOCHS");
  with_env(train->add_option("--backend", train_backend, "direct or indexed"),
           "BACKEND");
  with_env(train->add_option("--seed", train_seed, "Deterministic seed"),
           "SEED");
  with_env(train->add_option("--T", train_threshold,
                             "Vote clamp (0: clauses/25)"),
           "T");
  with_env(train->add_option("--s", train_s, "Specificity"), "S");
  with_env(train->add_flag("--boost", train_boost,
                           "Always reinforce true literals of firing clauses"),
           "BOOST");
  with_env(train->add_option("--out", train_out, "Write the model here"),
           "OUT");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Sweep clause counts and compare evaluation backends");
  std::vector<std::string> bench_datasets;
  std::string bench_test, bench_backend = "both", bench_out;
  std::string bench_format = "csv";
  std::vector<std::uint32_t> bench_clauses{100};
  std::uint32_t bench_epochs = 1, bench_reps = 1, bench_threshold = 0;
  std::uint32_t bench_features = 0;
  std::uint64_t bench_seed = 1;
  double bench_s = 3.9;
  with_env(bench
               ->add_option("--dataset", bench_datasets,
                            "Dataset file(s), or synthetic-xor")
               ->required(),
           "DATASET");
  with_env(bench->add_option("--test-dataset", bench_test, "Held-out split"),
           "TEST_DATASET");
  with_env(bench->add_option("--clauses", bench_clauses,
                             "Clause grid (repeatable)"),
           "CLAUSES");
  with_env(bench->add_option("--epochs", bench_epochs,
                             "Epochs per cell (0: inference only)"),
           "EPOCHS");
  with_env(bench->add_option("--reps", bench_reps, "Repetitions per cell"),
           "REPS");
  with_env(bench->add_option("--backend", bench_backend,
                             "direct, indexed, or both"),
           "BACKEND");
  with_env(bench->add_option("--seed", bench_seed, "Deterministic seed"),
           "SEED");
  with_env(bench->add_option("--T", bench_threshold,
                             "Vote clamp (0: heuristic)"),
           "T");
  with_env(bench->add_option("--s", bench_s, "Specificity"), "S");
  with_env(bench->add_option("--features", bench_features,
                             "Synthetic dataset width"),
           "FEATURES");
  with_env(bench->add_option("--out", bench_out, "Report file (default stdout)"),
           "OUT");
  with_env(bench->add_option("--format", bench_format, "csv or markdown"),
           "FORMAT");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Randomized equivalence and index-integrity checks");
  std::uint64_t verify_seed = 1;
  std::uint32_t verify_rounds = 50;
  std::int64_t verify_corrupt = -1;
  with_env(verify->add_option("--seed", verify_seed, "Deterministic seed"),
           "SEED");
  with_env(verify->add_option("--rounds", verify_rounds, "Rounds to run"),
           "ROUNDS");
  verify
      ->add_option("--inject-corruption", verify_corrupt,
                   "Damage the index in this round (self-test hook)")
      ->group(""); // hidden

  // binarize
  auto* binarize = app.add_subcommand(
      "binarize", "Convert raw data into a binary dataset file");
  std::string bin_kind = "idx", bin_dataset, bin_labels, bin_out;
  std::string bin_vocab_in, bin_vocab_out;
  std::uint32_t bin_bits = 1, bin_features = 5000;
  with_env(binarize->add_option("--kind", bin_kind, "idx or text"), "KIND");
  with_env(binarize
               ->add_option("--dataset", bin_dataset,
                            "IDX image file or labeled text file")
               ->required(),
           "DATASET");
  with_env(binarize->add_option("--labels", bin_labels, "IDX label file"),
           "LABELS");
  with_env(binarize->add_option("--bits", bin_bits,
                                "Grey levels per pixel (1-4)"),
           "BITS");
  with_env(binarize->add_option("--features", bin_features,
                                "Vocabulary size for text"),
           "FEATURES");
  with_env(binarize->add_option("--vocab-in", bin_vocab_in,
                                "Fixed vocabulary (one token per line)"),
           "VOCAB_IN");
  with_env(binarize->add_option("--vocab-out", bin_vocab_out,
                                "Write the built vocabulary here"),
           "VOCAB_OUT");
  with_env(binarize->add_option("--out", bin_out, "Dataset file to write")
               ->required(),
           "OUT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train->parsed())
      return run_train(train_dataset, train_test, train_clauses, train_epochs,
                       train_backend, train_seed, train_threshold, train_s,
                       train_boost, train_out);
    if (bench->parsed())
      return run_bench(bench_datasets, bench_test, bench_clauses, bench_epochs,
                       bench_reps, bench_backend, bench_seed, bench_threshold,
                       bench_s, bench_features, bench_out, bench_format);
    if (verify->parsed())
      return run_verify(verify_seed, verify_rounds, verify_corrupt);
    if (binarize->parsed())
      return run_binarize(bin_kind, bin_dataset, bin_labels, bin_bits,
                          bin_features, bin_vocab_in, bin_vocab_out, bin_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
