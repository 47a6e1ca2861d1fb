#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tssl {

enum class ErrorCode {
  kMalformedTagSet,
  kTaggerUnavailable,
  kSchemaViolation,
  kUnmergeableSentence,
  kUnresolvableTagSet,
  kEmptyAnswer,
  kCorruptDb,
  kBadRequest,
  kNotFound,
  kIo,
};

// Machine-readable snake_case name, used in service error bodies.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tssl
