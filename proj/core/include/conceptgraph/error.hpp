#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conceptgraph {

enum class ErrorKind {
  input,             // bad argument or data violating a precondition
  parse,             // malformed text input
  config,            // invalid model/run configuration
  undefined_metric,  // metric has no value for this graph
  io,                // filesystem failure
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::input, message) {}
};

class ParseError : public Error {
 public:
  /// `line` is 1-based; 0 means the position is unknown.
  ParseError(const std::string& message, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorKind::config, message) {}
};

class UndefinedMetricError : public Error {
 public:
  explicit UndefinedMetricError(const std::string& message)
      : Error(ErrorKind::undefined_metric, message) {}
};

class IoError : public Error {
 public:
  IoError(const std::string& message, std::string path)
      : Error(ErrorKind::io, message + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace conceptgraph
