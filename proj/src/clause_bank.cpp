#include "tsetlin/clause_bank.hpp"

#include <string>

#include "tsetlin/errors.hpp"

namespace tsetlin {

void tm_config::validate() const {
  if (classes < 1) throw shape_error("classes must be >= 1");
  if (features < 1) throw shape_error("features must be >= 1");
  if (clauses_per_class < 2 || clauses_per_class % 2 != 0)
    throw shape_error("clauses_per_class must be even and >= 2");
  if (half_range < 1 || half_range > 127)
    throw shape_error("half_range must be in [1, 127] (states fit one byte)");
  if (threshold < 1) throw shape_error("threshold must be >= 1");
  if (!(specificity > 1.0)) throw shape_error("specificity must be > 1");
}

clause_bank::clause_bank(std::uint32_t classes, std::uint32_t clauses_per_class,
                         std::uint32_t features, std::uint8_t half_range)
    : classes_(classes),
      clauses_(clauses_per_class),
      features_(features),
      half_range_(half_range) {
  tm_config cfg;
  cfg.classes = classes;
  cfg.clauses_per_class = clauses_per_class;
  cfg.features = features;
  cfg.half_range = half_range;
  cfg.validate();
  // Every TA starts on the exclude side right at the decision boundary, so a
  // fresh bank has empty clauses and an empty inclusion index.
  states_.assign(static_cast<std::size_t>(classes_) * clauses_ * literals(),
                 half_range_);
}

namespace {

void check_width(const clause_bank& bank, bit_span x) {
  if (x.size != bank.features())
    throw shape_error("input has " + std::to_string(x.size) +
                      " features, bank expects " +
                      std::to_string(bank.features()));
}

// Literal k is false under x iff (k < o and x_k = 0) or (k >= o and x_{k-o} = 1).
inline bool literal_false(bit_span x, std::uint32_t k, std::uint32_t features) {
  return k < features ? !x.test(k) : x.test(k - features);
}

} // namespace

bool evaluate_clause(std::span<const std::uint8_t> team,
                     std::uint8_t half_range, bit_span x) {
  const auto features = static_cast<std::uint32_t>(team.size() / 2);
  if (team.size() != 2 * static_cast<std::size_t>(x.size) ||
      x.size != features)
    throw shape_error("team covers " + std::to_string(team.size() / 2) +
                      " features, input has " + std::to_string(x.size));
  for (std::uint32_t k = 0; k < team.size(); ++k) {
    if (ta_includes(team[k], half_range) && literal_false(x, k, features))
      return false;
  }
  return true;
}

bool evaluate_clause(const clause_bank& bank, std::uint32_t class_i,
                     std::uint32_t clause_j, bit_span x) {
  return evaluate_clause(bank.team(class_i, clause_j), bank.half_range(), x);
}

std::int32_t class_score(const clause_bank& bank, std::uint32_t class_i,
                         bit_span x) {
  if (class_i >= bank.classes())
    throw shape_error("class index " + std::to_string(class_i) +
                      " out of range");
  direct_scorer scorer(bank);
  return scorer.score_class(x, class_i);
}

int predict_binary(const clause_bank& bank, bit_span x) {
  if (bank.classes() != 1)
    throw shape_error("predict_binary needs a single-class bank");
  return class_score(bank, 0, x) >= 0 ? 1 : 0;
}

std::uint32_t predict_multiclass(const clause_bank& bank, bit_span x) {
  if (bank.classes() < 2)
    throw shape_error("predict_multiclass needs at least two classes");
  direct_scorer scorer(bank);
  return scorer.predict(x);
}

direct_scorer::direct_scorer(const clause_bank& bank)
    : bank_(bank), false_literal_(bank.literals()) {}

void direct_scorer::prepare(bit_span x) {
  check_width(bank_, x);
  const std::uint32_t o = bank_.features();
  for (std::uint32_t k = 0; k < o; ++k) {
    const bool set = x.test(k);
    false_literal_[k] = !set;
    false_literal_[o + k] = set;
  }
}

std::int32_t direct_scorer::score_prepared(std::uint32_t class_i,
                                           std::uint8_t* outputs,
                                           work_counters* counters) {
  const std::uint32_t n = bank_.clauses_per_class();
  const std::uint32_t half = bank_.half_clauses();
  const std::uint32_t lits = bank_.literals();
  const std::uint8_t half_range = bank_.half_range();
  const std::uint8_t* fl = false_literal_.data();

  std::int32_t positive = 0;
  std::int32_t negative = 0;
  std::uint64_t falsified = 0;
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint8_t* team =
        bank_.raw_states().data() +
        (static_cast<std::size_t>(class_i) * n + j) * lits;
    std::uint8_t out = 1;
    for (std::uint32_t k = 0; k < lits; ++k) {
      if (team[k] > half_range && fl[k]) {
        out = 0;
        break;
      }
    }
    falsified += out == 0;
    if (outputs) outputs[j] = out;
    if (j < half)
      positive += out;
    else
      negative += out;
  }
  if (counters) {
    counters->literal_visits += static_cast<std::uint64_t>(n) * lits;
    counters->clauses_falsified += falsified;
  }
  return positive - negative;
}

std::int32_t direct_scorer::score_class(bit_span x, std::uint32_t class_i,
                                        std::uint8_t* outputs,
                                        work_counters* counters) {
  if (class_i >= bank_.classes())
    throw shape_error("class index " + std::to_string(class_i) +
                      " out of range");
  prepare(x);
  return score_prepared(class_i, outputs, counters);
}

void direct_scorer::scores(bit_span x, std::span<std::int32_t> out,
                           work_counters* counters) {
  if (out.size() != bank_.classes())
    throw shape_error("score buffer size does not match class count");
  prepare(x);
  for (std::uint32_t i = 0; i < bank_.classes(); ++i)
    out[i] = score_prepared(i, nullptr, counters);
}

std::uint32_t direct_scorer::predict(bit_span x, work_counters* counters) {
  if (bank_.classes() < 2)
    throw shape_error("prediction needs at least two classes");
  prepare(x);
  std::uint32_t best = 0;
  std::int32_t best_score = score_prepared(0, nullptr, counters);
  for (std::uint32_t i = 1; i < bank_.classes(); ++i) {
    const std::int32_t s = score_prepared(i, nullptr, counters);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

} // namespace tsetlin
