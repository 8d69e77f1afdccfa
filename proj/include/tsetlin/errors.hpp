#pragma once

#include <stdexcept>
#include <string>

namespace tsetlin {

/// Input dimensions do not match what an operation expects.
struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant was violated (duplicate insert, stale position, ...).
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file is not in the expected format (magic, version, checksum).
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Underlying I/O failed (open, read, write).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace tsetlin
