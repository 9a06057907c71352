#include "tsa/error.hpp"

#include <fmt/format.h>

namespace tsa {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIo: return "IOError";
    case ErrorCode::kLineCountMismatch: return "LineCountMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNonFiniteTemperature: return "NonFiniteTemperature";
    case ErrorCode::kImplausibleTemperature: return "ImplausibleTemperature";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kBadDimensions: return "BadDimensions";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kInvalidZone: return "InvalidZone";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kPrecondition: return "PreconditionViolated";
    case ErrorCode::kMissingOutput: return "MissingOutput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), message)), code_(code) {}

namespace {

std::string describe_location(const std::string& file, std::size_t line, std::size_t field,
                              const std::string& detail) {
  if (field == ParseError::npos) {
    return fmt::format("{}:{}: {}", file, line, detail);
  }
  return fmt::format("{}:{}: field {}: {}", file, line, field, detail);
}

}  // namespace

ParseError::ParseError(ErrorCode code, std::string file, std::size_t line, std::size_t field,
                       const std::string& detail)
    : Error(code, describe_location(file, line, field, detail)),
      file_(std::move(file)),
      line_(line),
      field_(field) {}

}  // namespace tsa
