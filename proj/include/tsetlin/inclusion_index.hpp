#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsetlin/clause_bank.hpp"
#include "tsetlin/flip_event.hpp"

namespace tsetlin {

/// Inverted index over clause inclusion: for every (class, literal) pair, the
/// list of clause ids whose automaton includes that literal, plus a position
/// table giving each clause's 1-based slot in each list (0 when absent).
/// The position table is what makes removal constant-time: the removed entry
/// is overwritten with the list's last element, no traversal.
///
/// Clause ids are class-local and dense; ids below clauses_per_class/2 carry
/// positive polarity, the rest negative, so polarity never needs storing.
///
/// Mutation is single-writer. A frozen index can serve any number of readers,
/// each holding its own scratch (see indexed_scorer).
class inclusion_index {
public:
  static constexpr std::uint32_t npos = 0; // "not in the list"

  /// Empty index for an all-exclude bank.
  inclusion_index(std::uint32_t classes, std::uint32_t clauses_per_class,
                  std::uint32_t features);

  /// Index of an existing bank; lists hold ids in ascending order.
  explicit inclusion_index(const clause_bank& bank);

  std::uint32_t classes() const { return classes_; }
  std::uint32_t clauses_per_class() const { return clauses_; }
  std::uint32_t half_clauses() const { return clauses_ / 2; }
  std::uint32_t features() const { return features_; }
  std::uint32_t literals() const { return 2 * features_; }

  const std::vector<std::uint32_t>& list(std::uint32_t class_i,
                                         std::uint32_t literal_k) const {
    return lists_[row(class_i, literal_k)];
  }
  std::uint32_t list_size(std::uint32_t class_i, std::uint32_t literal_k) const {
    return static_cast<std::uint32_t>(lists_[row(class_i, literal_k)].size());
  }

  /// 1-based position of clause_j in the (class_i, literal_k) list, npos if
  /// absent.
  std::uint32_t position(std::uint32_t class_i, std::uint32_t clause_j,
                         std::uint32_t literal_k) const {
    return positions_[cell(class_i, clause_j, literal_k)];
  }

  /// Appends clause_j to the (class_i, literal_k) list. Constant time.
  /// Throws integrity_error if the clause is already listed.
  void insert(std::uint32_t class_i, std::uint32_t literal_k,
              std::uint32_t clause_j);

  /// Removes clause_j from the (class_i, literal_k) list by overwriting its
  /// slot with the last entry. Constant time. Throws integrity_error if the
  /// clause is not listed.
  void remove(std::uint32_t class_i, std::uint32_t literal_k,
              std::uint32_t clause_j);

  void apply(const flip_event& event);
  void apply(std::span<const flip_event> events);

  /// Element reads/writes performed by insert/remove so far; each call adds a
  /// small constant independent of list length.
  std::uint64_t element_accesses() const { return element_accesses_; }

  /// Verifies position coherence and absence of duplicates; throws
  /// integrity_error naming the offending (class, literal) on failure.
  void check_coherent() const;

  /// Verifies the membership invariant against a bank: clause j is listed
  /// under literal k iff its automaton includes k.
  void check_matches(const clause_bank& bank) const;

  /// List-permutation equivalence: same members per (class, literal) list,
  /// order ignored.
  bool equivalent_as_sets(const inclusion_index& other) const;

private:
  std::size_t row(std::uint32_t i, std::uint32_t k) const {
    return static_cast<std::size_t>(i) * literals() + k;
  }
  std::size_t cell(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return row(i, k) * clauses_ + j;
  }

  std::uint32_t classes_;
  std::uint32_t clauses_;
  std::uint32_t features_;
  std::vector<std::vector<std::uint32_t>> lists_;
  std::vector<std::uint32_t> positions_;
  std::uint64_t element_accesses_ = 0;
};

} // namespace tsetlin
