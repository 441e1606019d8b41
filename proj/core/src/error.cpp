#include "conceptgraph/error.hpp"

namespace conceptgraph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input:
      return "input_error";
    case ErrorKind::parse:
      return "parse_error";
    case ErrorKind::config:
      return "config_error";
    case ErrorKind::undefined_metric:
      return "undefined_metric";
    case ErrorKind::io:
      return "io_error";
  }
  return "error";
}

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(ErrorKind::parse,
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace conceptgraph
