#include "tsetlin/verify.hpp"

#include <string>

#include "tsetlin/clause_bank.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/inclusion_index.hpp"
#include "tsetlin/indexed_eval.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

namespace {

clause_bank random_bank(rng& gen, std::uint32_t classes, std::uint32_t clauses,
                        std::uint32_t features, double density) {
  clause_bank bank(classes, clauses, features, 100);
  for (std::uint32_t i = 0; i < classes; ++i)
    for (std::uint32_t j = 0; j < clauses; ++j)
      for (std::uint32_t k = 0; k < 2 * features; ++k)
        if (gen.bernoulli(density)) bank.set_state(i, j, k, 101);
  return bank;
}

bit_vector random_input(rng& gen, std::uint32_t features) {
  bit_vector x(features);
  for (std::uint32_t k = 0; k < features; ++k) x.set(k, gen.bernoulli(0.5));
  return x;
}

// Flip one random automaton across the include boundary and mirror it in the
// index, exactly as training maintenance would.
void random_flip(rng& gen, clause_bank& bank, inclusion_index& index) {
  const std::uint32_t i = gen.below(bank.classes());
  const std::uint32_t j = gen.below(bank.clauses_per_class());
  const std::uint32_t k = gen.below(bank.literals());
  const bool included = bank.includes(i, j, k);
  bank.set_state(i, j, k, included ? 100 : 101);
  index.apply(flip_event{i, j, k, !included});
}

void corrupt(inclusion_index& index, const clause_bank& bank) {
  // Remove a listed clause without touching the bank; if everything is
  // excluded, list a clause that is not included instead.
  for (std::uint32_t i = 0; i < bank.classes(); ++i)
    for (std::uint32_t k = 0; k < bank.literals(); ++k)
      if (index.list_size(i, k) > 0) {
        index.remove(i, k, index.list(i, k).front());
        return;
      }
  index.insert(0, 0, 0);
}

} // namespace

verify_summary run_verification(const verify_options& options) {
  verify_summary summary;
  for (std::uint32_t round = 0; round < options.rounds; ++round) {
    const std::uint64_t round_seed = mix_seed(options.seed + round);
    rng gen(round_seed);
    const auto fail = [&](const std::string& check, const std::string& detail) {
      summary.failures.push_back({round, round_seed, check, detail});
    };
    try {
      const std::uint32_t classes = 1 + gen.below(4);
      const std::uint32_t clauses = 2 * (1 + gen.below(10));
      const std::uint32_t features = 1 + gen.below(8);
      const double density = 0.05 + 0.9 * gen.unit();
      clause_bank bank = random_bank(gen, classes, clauses, features, density);
      inclusion_index index(bank);

      if (options.corrupt_round == round) corrupt(index, bank);

      for (std::uint32_t step = 0; step < 64; ++step) {
        random_flip(gen, bank, index);
        if (step % 8 != 0) continue;
        const bit_vector x = random_input(gen, features);
        indexed_scorer scorer(index);
        std::vector<std::int32_t> indexed(classes);
        scorer.scores(x, indexed);
        direct_scorer direct(bank);
        std::vector<std::int32_t> expected(classes);
        direct.scores(x, expected);
        if (indexed != expected) {
          fail("score-equivalence",
               "indexed and direct class scores differ at step " +
                   std::to_string(step));
          break;
        }
      }

      index.check_coherent();
      index.check_matches(bank);
      if (!index.equivalent_as_sets(inclusion_index(bank)))
        fail("rebuild-equivalence",
             "maintained index differs from a fresh rebuild");
    } catch (const integrity_error& e) {
      fail("index-integrity", e.what());
    } catch (const std::exception& e) {
      fail("unexpected-error", e.what());
    }
    ++summary.rounds_run;
  }
  return summary;
}

} // namespace tsetlin
