#pragma once

#include <stdexcept>
#include <string>

namespace infsimp {

// Dimension, shift or endpoint mismatch: a programming or instance error.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input file; the message carries a key path.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace infsimp
