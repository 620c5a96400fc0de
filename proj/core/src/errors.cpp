#include "deident/errors.hpp"

namespace deident {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TruncatedStream: return "TruncatedStream";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedTransferSyntax: return "UnsupportedTransferSyntax";
    case ErrorCode::ValueTooLong: return "ValueTooLong";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::UnknownActionCode: return "UnknownActionCode";
    case ErrorCode::MalformedPattern: return "MalformedPattern";
    case ErrorCode::NoDummyForVR: return "NoDummyForVR";
    case ErrorCode::QuarantineObject: return "QuarantineObject";
    case ErrorCode::SessionClosed: return "SessionClosed";
    case ErrorCode::RootTooLong: return "RootTooLong";
    case ErrorCode::UnparseableDate: return "UnparseableDate";
    case ErrorCode::BadAgeFormat: return "BadAgeFormat";
    case ErrorCode::GeometryMismatch: return "GeometryMismatch";
    case ErrorCode::MalformedJpeg: return "MalformedJpeg";
    case ErrorCode::UnsupportedJpegMode: return "UnsupportedJpegMode";
    case ErrorCode::MissingSubjectKey: return "MissingSubjectKey";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::PairMismatch: return "PairMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace deident
