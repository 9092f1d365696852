#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkscale {

/// Base class for every error raised by the library. `kind()` is a short
/// stable token used by the CLI for its machine-parsable error prefix.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidWindowError : Error {
  explicit InvalidWindowError(const std::string& what) : Error("invalid-window", what) {}
};

/// Graphs or sequences with mismatched node counts.
struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error("shape", what) {}
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& what) : Error("invalid-argument", what) {}
};

/// Katz series requested with beta >= 1 / lambda_max.
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& what) : Error("divergence", what) {}
};

struct IterationLimitError : Error {
  explicit IterationLimitError(const std::string& what) : Error("iteration-limit", what) {}
};

struct SequenceTooShortError : Error {
  explicit SequenceTooShortError(const std::string& what) : Error("sequence-too-short", what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error("unsupported", what) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error("range", what) {}
};

/// Malformed contact-event input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse", "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed sequence or sweep file.
struct FormatError : Error {
  explicit FormatError(const std::string& what) : Error("format", what) {}
};

}  // namespace linkscale
