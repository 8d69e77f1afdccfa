#pragma once

// Shared test fixtures and independent reference implementations. The oracle
// evaluators here deliberately re-derive clause semantics with plain loops so
// library regressions cannot hide behind shared code.

#include <cstdint>
#include <vector>

#include "tsetlin/bits.hpp"
#include "tsetlin/clause_bank.hpp"
#include "tsetlin/rng.hpp"

namespace test_helpers {

using tsetlin::bit_vector;
using tsetlin::clause_bank;

// Clause truth by the book: every included positive literal must be 1, every
// included negated literal must be 0; no included literal means true.
inline bool oracle_clause(const clause_bank& bank, std::uint32_t class_i,
                          std::uint32_t clause_j, const bit_vector& x) {
  const std::uint32_t o = bank.features();
  for (std::uint32_t k = 0; k < o; ++k) {
    if (bank.includes(class_i, clause_j, k) && !x.test(k)) return false;
  }
  for (std::uint32_t k = 0; k < o; ++k) {
    if (bank.includes(class_i, clause_j, o + k) && x.test(k)) return false;
  }
  return true;
}

inline std::int32_t oracle_score(const clause_bank& bank, std::uint32_t class_i,
                                 const bit_vector& x) {
  std::int32_t score = 0;
  const std::uint32_t half = bank.half_clauses();
  for (std::uint32_t j = 0; j < bank.clauses_per_class(); ++j) {
    const bool out = oracle_clause(bank, class_i, j, x);
    score += (j < half) ? out : -static_cast<std::int32_t>(out);
  }
  return score;
}

inline std::uint32_t oracle_argmax(const clause_bank& bank,
                                   const bit_vector& x) {
  std::uint32_t best = 0;
  std::int32_t best_score = oracle_score(bank, 0, x);
  for (std::uint32_t i = 1; i < bank.classes(); ++i) {
    const std::int32_t s = oracle_score(bank, i, x);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

inline clause_bank random_bank(tsetlin::rng& gen, std::uint32_t classes,
                               std::uint32_t clauses, std::uint32_t features,
                               double include_density) {
  clause_bank bank(classes, clauses, features, 100);
  for (std::uint32_t i = 0; i < classes; ++i)
    for (std::uint32_t j = 0; j < clauses; ++j)
      for (std::uint32_t k = 0; k < 2 * features; ++k)
        if (gen.bernoulli(include_density)) bank.set_state(i, j, k, 101);
  return bank;
}

inline bit_vector input_from_mask(std::uint32_t features, std::uint32_t mask) {
  bit_vector x(features);
  for (std::uint32_t k = 0; k < features; ++k) x.set(k, (mask >> k) & 1u);
  return x;
}

inline bit_vector random_input(tsetlin::rng& gen, std::uint32_t features) {
  bit_vector x(features);
  for (std::uint32_t k = 0; k < features; ++k) x.set(k, gen.bernoulli(0.5));
  return x;
}

// Four clauses over two features: both positive clauses include feature 0,
// both negative clauses include the negation of feature 0 and feature 1.
// Under x = (1, 0) the negative clauses falsify and the class scores 2.
inline clause_bank worked_example_bank() {
  clause_bank bank(1, 4, 2, 100);
  const auto include = [&](std::uint32_t j, std::uint32_t k) {
    bank.set_state(0, j, k, 101);
  };
  include(0, 0); // positive clause 0: feature 0
  include(1, 0); // positive clause 1: feature 0
  include(2, 2); // negative clause 0: not-feature-0
  include(2, 1); //                    feature 1
  include(3, 2); // negative clause 1: not-feature-0
  include(3, 1); //                    feature 1
  return bank;
}

} // namespace test_helpers
