#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsa {

enum class ErrorCode {
  kIo,
  kLineCountMismatch,
  kParse,
  kNonFiniteTemperature,
  kImplausibleTemperature,
  kWrongLength,
  kBadDimensions,
  kOutOfBounds,
  kEmptyInput,
  kEmptyDistribution,
  kInvalidZone,
  kInvalidConfig,
  kInvalidScenario,
  kPrecondition,
  kMissingOutput,
};

const char* to_string(ErrorCode code) noexcept;

/// Base for every error raised by the toolkit. The code is stable and
/// intended for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A malformed line in one of the recording files. `line` is 1-based;
/// `field` is the 0-based column index, or npos when the whole line is bad.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(ErrorCode code, std::string file, std::size_t line, std::size_t field,
             const std::string& detail);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t field_;
};

}  // namespace tsa
