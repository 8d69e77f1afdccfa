#include "tsetlin/inclusion_index.hpp"

#include <algorithm>
#include <string>

#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

std::string cell_name(std::uint32_t i, std::uint32_t k, std::uint32_t j) {
  return "class " + std::to_string(i) + ", literal " + std::to_string(k) +
         ", clause " + std::to_string(j);
}

} // namespace

inclusion_index::inclusion_index(std::uint32_t classes,
                                 std::uint32_t clauses_per_class,
                                 std::uint32_t features)
    : classes_(classes), clauses_(clauses_per_class), features_(features) {
  lists_.resize(static_cast<std::size_t>(classes_) * literals());
  positions_.assign(
      static_cast<std::size_t>(classes_) * literals() * clauses_, npos);
}

inclusion_index::inclusion_index(const clause_bank& bank)
    : inclusion_index(bank.classes(), bank.clauses_per_class(),
                      bank.features()) {
  for (std::uint32_t i = 0; i < classes_; ++i)
    for (std::uint32_t j = 0; j < clauses_; ++j)
      for (std::uint32_t k = 0; k < literals(); ++k)
        if (bank.includes(i, j, k)) insert(i, k, j);
}

void inclusion_index::insert(std::uint32_t class_i, std::uint32_t literal_k,
                             std::uint32_t clause_j) {
  auto& pos = positions_[cell(class_i, clause_j, literal_k)];
  ++element_accesses_; // position read
  if (pos != npos)
    throw integrity_error("insert of already-listed clause: " +
                          cell_name(class_i, literal_k, clause_j));
  auto& lst = lists_[row(class_i, literal_k)];
  lst.push_back(clause_j);
  ++element_accesses_; // list append
  pos = static_cast<std::uint32_t>(lst.size());
  ++element_accesses_; // position write
}

void inclusion_index::remove(std::uint32_t class_i, std::uint32_t literal_k,
                             std::uint32_t clause_j) {
  auto& pos = positions_[cell(class_i, clause_j, literal_k)];
  ++element_accesses_; // position read
  if (pos == npos)
    throw integrity_error("remove of unlisted clause: " +
                          cell_name(class_i, literal_k, clause_j));
  auto& lst = lists_[row(class_i, literal_k)];
  const std::uint32_t moved = lst.back();
  ++element_accesses_; // last-element read
  lst[pos - 1] = moved;
  ++element_accesses_; // slot overwrite
  lst.pop_back();
  positions_[cell(class_i, moved, literal_k)] = pos;
  ++element_accesses_; // moved clause's position write
  pos = npos;
  ++element_accesses_; // removed clause's position clear
}

void inclusion_index::apply(const flip_event& event) {
  if (event.now_included)
    insert(event.class_index, event.literal, event.clause);
  else
    remove(event.class_index, event.literal, event.clause);
}

void inclusion_index::apply(std::span<const flip_event> events) {
  for (const flip_event& e : events) apply(e);
}

void inclusion_index::check_coherent() const {
  for (std::uint32_t i = 0; i < classes_; ++i) {
    for (std::uint32_t k = 0; k < literals(); ++k) {
      const auto& lst = list(i, k);
      std::vector<bool> seen(clauses_, false);
      for (std::uint32_t p = 0; p < lst.size(); ++p) {
        const std::uint32_t j = lst[p];
        if (j >= clauses_)
          throw integrity_error("clause id out of range at class " +
                                std::to_string(i) + ", literal " +
                                std::to_string(k));
        if (seen[j])
          throw integrity_error("duplicate entry: " + cell_name(i, k, j));
        seen[j] = true;
        if (position(i, j, k) != p + 1)
          throw integrity_error("position mismatch: " + cell_name(i, k, j) +
                                " listed at " + std::to_string(p + 1) +
                                ", table says " +
                                std::to_string(position(i, j, k)));
      }
      for (std::uint32_t j = 0; j < clauses_; ++j)
        if (!seen[j] && position(i, j, k) != npos)
          throw integrity_error("stale position entry: " + cell_name(i, k, j));
    }
  }
}

void inclusion_index::check_matches(const clause_bank& bank) const {
  if (bank.classes() != classes_ || bank.clauses_per_class() != clauses_ ||
      bank.features() != features_)
    throw integrity_error("index and bank dimensions differ");
  for (std::uint32_t i = 0; i < classes_; ++i)
    for (std::uint32_t j = 0; j < clauses_; ++j)
      for (std::uint32_t k = 0; k < literals(); ++k) {
        const bool listed = position(i, j, k) != npos;
        if (listed != bank.includes(i, j, k))
          throw integrity_error("membership mismatch: " + cell_name(i, k, j) +
                                (listed ? " listed but excluded"
                                        : " included but unlisted"));
      }
}

bool inclusion_index::equivalent_as_sets(const inclusion_index& other) const {
  if (classes_ != other.classes_ || clauses_ != other.clauses_ ||
      features_ != other.features_)
    return false;
  for (std::uint32_t i = 0; i < classes_; ++i)
    for (std::uint32_t k = 0; k < literals(); ++k) {
      auto a = list(i, k);
      auto b = other.list(i, k);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  return true;
}

} // namespace tsetlin
