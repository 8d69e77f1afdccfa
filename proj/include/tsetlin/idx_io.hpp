#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsetlin/dataset.hpp"

namespace tsetlin {

/// Reads an IDX image container (big-endian magic 0x00000803, dims
/// count x rows x cols) into one row per image. Transparently inflates
/// gzip-compressed files.
byte_matrix load_idx_images(const std::string& path);

/// Reads an IDX label container (magic 0x00000801).
std::vector<std::uint8_t> load_idx_labels(const std::string& path);

} // namespace tsetlin
