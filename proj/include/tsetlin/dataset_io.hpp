#pragma once

#include <string>

#include "tsetlin/dataset.hpp"

namespace tsetlin {

/// Versioned binary dataset file; round-trips bit-exactly and carries the
/// provenance (kind, binarization spec, vocabulary size, source label). A
/// trailing checksum covers the whole payload.
void save_dataset(const bool_dataset& ds, const std::string& path);
bool_dataset load_dataset(const std::string& path);

} // namespace tsetlin
