#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/feedback.hpp"
#include "tsetlin/inclusion_index.hpp"

using namespace tsetlin;
using namespace test_helpers;

TEST_CASE("a fresh bank indexes to empty lists and a clear position table") {
  clause_bank bank(2, 4, 3, 100);
  inclusion_index index(bank);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t k = 0; k < 6; ++k) {
      CHECK(index.list_size(i, k) == 0);
      for (std::uint32_t j = 0; j < 4; ++j)
        CHECK(index.position(i, j, k) == inclusion_index::npos);
    }
}

TEST_CASE("building from the worked-example bank yields its lists in id "
          "order") {
  const clause_bank bank = worked_example_bank();
  inclusion_index index(bank);
  CHECK(index.list(0, 0) == std::vector<std::uint32_t>{0, 1}); // feature 0
  CHECK(index.list(0, 2) == std::vector<std::uint32_t>{2, 3}); // !feature 0
  CHECK(index.list(0, 1) == std::vector<std::uint32_t>{2, 3}); // feature 1
  CHECK(index.list(0, 3).empty());                             // !feature 1
  CHECK(index.position(0, 2, 1) == 1);
  CHECK(index.position(0, 3, 1) == 2);
}

TEST_CASE("membership matches the automaton actions on random banks") {
  rng gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t classes = 1 + gen.below(3);
    const std::uint32_t clauses = 2 * (1 + gen.below(8));
    const std::uint32_t features = 1 + gen.below(8);
    const clause_bank bank =
        random_bank(gen, classes, clauses, features, gen.unit());
    inclusion_index index(bank);
    for (std::uint32_t i = 0; i < classes; ++i)
      for (std::uint32_t j = 0; j < clauses; ++j)
        for (std::uint32_t k = 0; k < 2 * features; ++k) {
          const auto& lst = index.list(i, k);
          const bool listed =
              std::find(lst.begin(), lst.end(), j) != lst.end();
          REQUIRE(listed == bank.includes(i, j, k));
        }
    index.check_coherent();
    index.check_matches(bank);
  }
}

TEST_CASE("insert appends at the back and records the 1-based position") {
  inclusion_index index(1, 4, 2);
  index.insert(0, 1, 2);
  CHECK(index.list(0, 1) == std::vector<std::uint32_t>{2});
  CHECK(index.position(0, 2, 1) == 1);
}

TEST_CASE("worked example: inserting into a two-entry list lands at "
          "position 3") {
  inclusion_index index(worked_example_bank());
  index.insert(0, 1, 0); // clause 0 joins the feature-1 list [2, 3]
  CHECK(index.list(0, 1) == std::vector<std::uint32_t>{2, 3, 0});
  CHECK(index.position(0, 0, 1) == 3);
}

TEST_CASE("positions always equal append order") {
  inclusion_index index(1, 1000, 1);
  rng gen(23);
  std::vector<std::uint32_t> order(1000);
  for (std::uint32_t j = 0; j < 1000; ++j) order[j] = j;
  for (std::uint32_t j = 999; j > 0; --j)
    std::swap(order[j], order[gen.below(j + 1)]);
  for (std::uint32_t p = 0; p < order.size(); ++p) {
    index.insert(0, 0, order[p]);
    CHECK(index.position(0, order[p], 0) == p + 1);
  }
  CHECK(index.list(0, 0) == order);
}

TEST_CASE("worked example: removal moves the last entry into the hole") {
  inclusion_index index(worked_example_bank());
  index.remove(0, 0, 0); // clause 0 leaves the feature-0 list [0, 1]
  CHECK(index.list(0, 0) == std::vector<std::uint32_t>{1});
  CHECK(index.position(0, 1, 0) == 1);
  CHECK(index.position(0, 0, 0) == inclusion_index::npos);
}

TEST_CASE("removing the only element leaves an empty list") {
  inclusion_index index(1, 2, 1);
  index.insert(0, 0, 1);
  index.remove(0, 0, 1);
  CHECK(index.list_size(0, 0) == 0);
  CHECK(index.position(0, 1, 0) == inclusion_index::npos);
}

TEST_CASE("double insert and absent remove are integrity errors") {
  inclusion_index index(1, 4, 1);
  index.insert(0, 0, 1);
  CHECK_THROWS_AS(index.insert(0, 0, 1), integrity_error);
  CHECK_THROWS_AS(index.remove(0, 0, 2), integrity_error);
}

TEST_CASE("long random flip sequences stay equal to a fresh rebuild") {
  rng gen(29);
  clause_bank bank = random_bank(gen, 2, 10, 6, 0.3);
  inclusion_index index(bank);
  for (int step = 0; step < 10000; ++step) {
    const std::uint32_t i = gen.below(2);
    const std::uint32_t j = gen.below(10);
    const std::uint32_t k = gen.below(12);
    const bool included = bank.includes(i, j, k);
    bank.set_state(i, j, k, included ? 100 : 101);
    index.apply(flip_event{i, j, k, !included});
  }
  index.check_coherent();
  index.check_matches(bank);
  CHECK(index.equivalent_as_sets(inclusion_index(bank)));
}

TEST_CASE("applying an empty event batch changes nothing") {
  inclusion_index index(worked_example_bank());
  const auto before = index.list(0, 0);
  index.apply(std::span<const flip_event>{});
  CHECK(index.list(0, 0) == before);
}

TEST_CASE("one inclusion flip maps to one insert") {
  inclusion_index index(1, 4, 2);
  index.apply(flip_event{0, 3, 1, true});
  CHECK(index.list(0, 1) == std::vector<std::uint32_t>{3});
}

TEST_CASE("an epoch of training events keeps the index equal to a rebuild") {
  tm_config cfg;
  cfg.classes = 2;
  cfg.clauses_per_class = 8;
  cfg.features = 6;
  cfg.threshold = 5;
  cfg.specificity = 3.0;
  clause_bank bank(cfg);
  inclusion_index index(bank);
  rng gen(cfg.seed);
  rng data(31);
  direct_scorer scorer(bank);
  std::vector<flip_event> events;
  for (int step = 0; step < 500; ++step) {
    const bit_vector x = random_input(data, cfg.features);
    train_step(bank, cfg, scorer, x, data.below(cfg.classes), gen, events);
    index.apply(events);
  }
  index.check_coherent();
  index.check_matches(bank);
  CHECK(index.equivalent_as_sets(inclusion_index(bank)));
}

TEST_CASE("insert and remove touch a constant number of elements") {
  inclusion_index index(1, 20000, 1);
  rng gen(37);
  std::uint64_t last = index.element_accesses();
  std::uint64_t worst = 0;
  for (std::uint32_t j = 0; j < 20000; ++j) {
    index.insert(0, 0, j);
    worst = std::max(worst, index.element_accesses() - last);
    last = index.element_accesses();
  }
  std::vector<std::uint32_t> order(20000);
  for (std::uint32_t j = 0; j < 20000; ++j) order[j] = j;
  for (std::uint32_t j = 19999; j > 0; --j)
    std::swap(order[j], order[gen.below(j + 1)]);
  for (const std::uint32_t j : order) {
    index.remove(0, 0, j);
    worst = std::max(worst, index.element_accesses() - last);
    last = index.element_accesses();
  }
  CHECK(worst <= 8);
}
