#pragma once

#include <stdexcept>
#include <string>

namespace lightkey {

// Error taxonomy mirrored by the CLI exit codes: IoError -> 3,
// DataError -> 4, ModelError -> 5. Usage errors map to 2.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lightkey
