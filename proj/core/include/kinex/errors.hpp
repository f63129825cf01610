#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace kinex {

/// Sample set that admits no fit (e.g. zero variance).
class DegenerateSampleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid experiment configuration. `key()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::filesystem::path path, const std::string& what)
      : std::runtime_error(what + ": " + path.string()), path_(std::move(path)) {}

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace kinex
