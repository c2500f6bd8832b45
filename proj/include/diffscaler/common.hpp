#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffscaler {

using Index = std::int64_t;

// Shape mismatch; message carries both shapes.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value produced where the contract requires finite output.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// backward() called on an already-consumed graph.
class GraphConsumedError : public std::runtime_error {
 public:
  explicit GraphConsumedError(const std::string& msg) : std::runtime_error(msg) {}
};

class GradCheckError : public std::runtime_error {
 public:
  explicit GradCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

// Serialization errors, each condition distinct.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};
class BadMagicError : public FormatError {
 public:
  explicit BadMagicError(const std::string& msg) : FormatError(msg) {}
};
class VersionMismatchError : public FormatError {
 public:
  explicit VersionMismatchError(const std::string& msg) : FormatError(msg) {}
};
class TruncatedFileError : public FormatError {
 public:
  explicit TruncatedFileError(const std::string& msg) : FormatError(msg) {}
};
class FingerprintMismatchError : public std::runtime_error {
 public:
  explicit FingerprintMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

class RegistryError : public std::runtime_error {
 public:
  explicit RegistryError(const std::string& msg) : std::runtime_error(msg) {}
};

class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string shape_str(const std::vector<Index>& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << 'x';
    os << s[i];
  }
  os << ']';
  return os.str();
}

}  // namespace diffscaler
