#pragma once

#include <stdexcept>
#include <string>

namespace etdec {

/// Bad configuration file or command-line usage. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or unreadable/unwritable file. CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data content or numeric domain violation. CLI exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace etdec
