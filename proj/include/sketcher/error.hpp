#pragma once

#include <stdexcept>
#include <string>

namespace sketcher {

enum class ErrorCode {
  MalformedJson,
  UnsupportedNbformat,
  FileNotFound,
  SandboxEscape,
  BackendUnavailable,
  BackendRefusal,
  StepBudgetExceeded,
  UnknownNode,
  EmptyReference,
  BothEmpty,
  EmbedderUnavailable,
  DegenerateSample,
  RankDeficient,
  InsufficientData,
  MissingField,
  TooFewPairs,
  DecodeFailure,
  UnrecognizedLabelFormat,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

/// All recoverable failures in the library carry a machine-checkable code
/// in addition to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sketcher
