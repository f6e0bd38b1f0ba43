// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace patma {

// Malformed input data: corpus/dictionary syntax, bad tag fields, bad model
// bytes. Maps to exit code 2 in the CLI.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / stream failures. Maps to exit code 3 in the CLI.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Model (de)serialization failures, distinguishable by kind.
class model_format_error : public format_error {
 public:
  enum class Kind { bad_magic, bad_version, truncated, bad_checksum, invalid_data };

  model_format_error(Kind kind, const std::string& what)
      : format_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace patma
