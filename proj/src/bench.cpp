#include "tsetlin/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tsetlin/dataset_io.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

std::optional<backend_choice> backend_choice_from_string(
    const std::string& name) {
  if (name == "direct") return backend_choice::direct;
  if (name == "indexed") return backend_choice::indexed;
  if (name == "both") return backend_choice::both;
  return std::nullopt;
}

void experiment::validate() const {
  if (datasets.empty()) throw shape_error("experiment needs a dataset");
  if (clause_grid.empty()) throw shape_error("experiment needs a clause grid");
  for (const std::uint32_t n : clause_grid)
    if (n < 2 || n % 2 != 0)
      throw shape_error("clause counts must be positive and even");
  if (repetitions < 1) throw shape_error("repetitions must be >= 1");
  if (!(specificity > 1.0)) throw shape_error("specificity must be > 1");
}

namespace {

constexpr const char* synthetic_id = "synthetic-xor";

std::string host_descriptor() {
  utsname u{};
  if (uname(&u) != 0) return "unknown";
  return std::string(u.sysname) + " " + u.release + " " + u.machine;
}

struct dataset_pair {
  bool_dataset train;
  bool_dataset test;
};

dataset_pair load_pair(const experiment& spec, const experiment_dataset& d) {
  dataset_pair pair;
  if (d.train_path == synthetic_id) {
    pair.train = make_noisy_xor(spec.synthetic_examples,
                                spec.synthetic_features, 0.1, spec.seed);
    pair.test = make_noisy_xor(spec.synthetic_examples / 2,
                               spec.synthetic_features, 0.0, spec.seed + 1);
    return pair;
  }
  pair.train = load_dataset(d.train_path);
  pair.test = d.test_path.empty() ? pair.train : load_dataset(d.test_path);
  if (pair.test.features() != pair.train.features())
    throw shape_error("train/test feature widths differ for " + d.id);
  return pair;
}

std::uint32_t pick_threshold(const experiment& spec, const bool_dataset& ds,
                             std::uint32_t clauses) {
  if (spec.threshold > 0) return spec.threshold;
  if (ds.prov.kind == dataset_kind::synthetic) return 15;
  return std::max<std::uint32_t>(1, clauses / 25);
}

struct sample_stats {
  double mean = 0.0;
  double stddev = 0.0;
};

sample_stats stats(const std::vector<double>& xs) {
  sample_stats s;
  if (xs.empty()) return s;
  for (const double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double acc = 0.0;
    for (const double x : xs) acc += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(acc / static_cast<double>(xs.size() - 1));
  }
  return s;
}

struct phase_samples {
  std::vector<double> seconds;
  std::vector<double> visits;
};

void run_cell(const experiment& spec, const experiment_dataset& d,
              const dataset_pair& data, std::uint32_t clauses, backend kind,
              std::map<std::string, phase_samples>& phases) {
  tm_config cfg;
  cfg.classes = data.train.classes();
  cfg.clauses_per_class = clauses;
  cfg.features = data.train.features();
  cfg.threshold = pick_threshold(spec, data.train, clauses);
  cfg.specificity = spec.specificity;
  cfg.boost_true_positive = spec.boost_true_positive;
  for (std::uint32_t rep = 0; rep < spec.repetitions; ++rep) {
    // The same cell seed for both backends keeps trajectories identical.
    cfg.seed = mix_seed(spec.seed ^ (std::uint64_t(clauses) << 20) ^ rep);
    clause_bank bank(cfg);
    const training_run run =
        run_training(bank, cfg, data.train, data.test, spec.epochs, kind);
    if (spec.epochs == 0) {
      phases["test"].seconds.push_back(run.inference_seconds);
      phases["test"].visits.push_back(
          static_cast<double>(run.inference_work.literal_visits));
      continue;
    }
    for (const epoch_metrics& m : run.epochs) {
      phases["train"].seconds.push_back(m.train_seconds);
      phases["train"].visits.push_back(
          static_cast<double>(m.train_work.literal_visits));
      phases["test"].seconds.push_back(m.test_seconds);
      phases["test"].visits.push_back(
          static_cast<double>(m.test_work.literal_visits));
    }
  }
  (void)d;
}

} // namespace

bench_report run_experiment(const experiment& spec) {
  spec.validate();
  bench_report report;
  report.seed = spec.seed;
  report.host = host_descriptor();
  report.generator = rng::identity();

  std::vector<backend> kinds;
  if (spec.backends != backend_choice::indexed)
    kinds.push_back(backend::direct);
  if (spec.backends != backend_choice::direct)
    kinds.push_back(backend::indexed);

  for (const experiment_dataset& d : spec.datasets) {
    const dataset_pair data = load_pair(spec, d);
    for (const std::uint32_t clauses : spec.clause_grid) {
      for (const backend kind : kinds) {
        std::map<std::string, phase_samples> phases;
        run_cell(spec, d, data, clauses, kind, phases);
        for (const auto& [phase, samples] : phases) {
          bench_record rec;
          rec.dataset = d.id;
          rec.features = data.train.features();
          rec.clauses = clauses;
          rec.backend = to_string(kind);
          rec.phase = phase;
          const sample_stats sec = stats(samples.seconds);
          rec.epoch_s_mean = sec.mean;
          rec.epoch_s_std = sec.stddev;
          rec.literal_visits = static_cast<std::uint64_t>(
              std::llround(stats(samples.visits).mean));
          report.records.push_back(std::move(rec));
        }
      }
    }
  }

  // Speedups once a cell has both backends.
  for (bench_record& rec : report.records) {
    if (rec.backend != "indexed") continue;
    for (bench_record& other : report.records) {
      if (other.backend == "direct" && other.dataset == rec.dataset &&
          other.clauses == rec.clauses && other.features == rec.features &&
          other.phase == rec.phase && rec.epoch_s_mean > 0.0) {
        const double speedup = other.epoch_s_mean / rec.epoch_s_mean;
        rec.speedup = speedup;
        other.speedup = speedup;
      }
    }
  }
  return report;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

double parse_double(std::string_view s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw format_error(std::string("bad ") + what + " in report: " +
                       std::string(s));
  return v;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw format_error(std::string("bad ") + what + " in report: " +
                       std::string(s));
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

constexpr const char* csv_header =
    "dataset,features,clauses,backend,phase,epoch_s_mean,epoch_s_std,"
    "literal_visits,speedup";

} // namespace

std::string report_csv(const bench_report& report) {
  std::ostringstream out;
  out << "# seed=" << report.seed << "\n";
  out << "# host=" << report.host << "\n";
  out << "# generator=" << report.generator << "\n";
  out << csv_header << "\n";
  for (const bench_record& r : report.records) {
    out << r.dataset << ',' << r.features << ',' << r.clauses << ','
        << r.backend << ',' << r.phase << ',' << format_double(r.epoch_s_mean)
        << ',' << format_double(r.epoch_s_std) << ',' << r.literal_visits
        << ',';
    if (r.speedup) out << format_double(*r.speedup);
    out << "\n";
  }
  return out.str();
}

bench_report parse_report_csv(const std::string& text) {
  bench_report report;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string value = line.substr(eq + 1);
      if (key == "seed") report.seed = parse_u64(value, "seed");
      if (key == "host") report.host = value;
      if (key == "generator") report.generator = value;
      continue;
    }
    if (!saw_header) {
      if (line != csv_header)
        throw format_error("unexpected CSV header: " + line);
      saw_header = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 9)
      throw format_error("bad CSV row (" + std::to_string(fields.size()) +
                         " fields): " + line);
    bench_record r;
    r.dataset = fields[0];
    r.features = static_cast<std::uint32_t>(parse_u64(fields[1], "features"));
    r.clauses = static_cast<std::uint32_t>(parse_u64(fields[2], "clauses"));
    r.backend = fields[3];
    r.phase = fields[4];
    r.epoch_s_mean = parse_double(fields[5], "epoch_s_mean");
    r.epoch_s_std = parse_double(fields[6], "epoch_s_std");
    r.literal_visits = parse_u64(fields[7], "literal_visits");
    if (!fields[8].empty()) r.speedup = parse_double(fields[8], "speedup");
    report.records.push_back(std::move(r));
  }
  if (!saw_header) throw format_error("CSV report has no header");
  return report;
}

std::string report_markdown(const bench_report& report) {
  std::ostringstream out;
  std::set<std::string> datasets;
  for (const bench_record& r : report.records) datasets.insert(r.dataset);

  for (const std::string& ds : datasets) {
    std::set<std::uint32_t> features;
    std::set<std::uint32_t> clauses;
    // (features, clauses, phase) -> speedup
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::string>, double>
        cells;
    for (const bench_record& r : report.records) {
      if (r.dataset != ds) continue;
      features.insert(r.features);
      clauses.insert(r.clauses);
      if (r.speedup) cells[{r.features, r.clauses, r.phase}] = *r.speedup;
    }
    out << "## " << ds << " indexing speedup\n\n";
    out << "| Clauses |";
    for (const std::uint32_t f : features)
      out << " " << f << " Train | " << f << " Test |";
    out << "\n|---:|";
    for (std::size_t i = 0; i < features.size(); ++i) out << "---:|---:|";
    out << "\n";
    for (const std::uint32_t n : clauses) {
      out << "| " << n << " |";
      for (const std::uint32_t f : features) {
        for (const char* phase : {"train", "test"}) {
          const auto it = cells.find({f, n, std::string(phase)});
          if (it == cells.end()) {
            out << " - |";
          } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2f", it->second);
            out << " " << buf << " |";
          }
        }
      }
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

void emit_report(const bench_report& report, const std::string& format,
                 const std::string& path) {
  std::string text;
  if (format == "csv")
    text = report_csv(report);
  else if (format == "markdown")
    text = report_markdown(report);
  else
    throw shape_error("unknown report format: " + format);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw io_error("cannot create " + path);
  out << text;
  if (!out) throw io_error("write failed for " + path);
}

} // namespace tsetlin
