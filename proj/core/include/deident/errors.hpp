#pragma once

#include <stdexcept>
#include <string>

namespace deident {

/// Machine-readable failure classes surfaced by the engine.
enum class ErrorCode {
  TruncatedStream,
  BadMagic,
  UnsupportedTransferSyntax,
  ValueTooLong,
  DuplicateRule,
  UnknownActionCode,
  MalformedPattern,
  NoDummyForVR,
  QuarantineObject,
  SessionClosed,
  RootTooLong,
  UnparseableDate,
  BadAgeFormat,
  GeometryMismatch,
  MalformedJpeg,
  UnsupportedJpegMode,
  MissingSubjectKey,
  SchemaMismatch,
  Infeasible,
  PairMismatch,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace deident
