#pragma once

#include <stdexcept>
#include <string>

namespace sri {

// Error categories aligned with CLI exit codes:
// UsageError -> 1, DataError -> 2, InternalError -> 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, corpora, labels).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant or contract violation.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sri
