#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kintree {

enum class ErrorCode {
  InvalidGraph,
  GirthTooSmall,
  DuplicateTerminals,
  TerminalCountMismatch,
  UnsupportedK,
  Disconnected,
  NoAttachment,
  PreconditionViolated,
  InvalidStructure,
  InternalCaseExhaustion,
  TooLarge,
  InfeasibleSpec,
  ParseError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kintree
