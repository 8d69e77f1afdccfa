#pragma once

#include <string>

#include "tsetlin/clause_bank.hpp"

namespace tsetlin {

/// Versioned binary model file: header (magic, version, classes, clauses per
/// class, features, state half-range), then TA states row-major as
/// (class, clause, literal). Only the bank is stored; an inclusion index is
/// derivable state and is rebuilt where needed after loading.
void save_model(const clause_bank& bank, const std::string& path);
clause_bank load_model(const std::string& path);

} // namespace tsetlin
