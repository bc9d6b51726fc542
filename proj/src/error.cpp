#include "ordfact/error.hpp"

namespace ordfact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::OutOfTableRange: return "OutOfTableRange";
    case ErrorCode::InvalidStepCount: return "InvalidStepCount";
    case ErrorCode::OffGrid: return "OffGrid";
    case ErrorCode::NegativeDuration: return "NegativeDuration";
    case ErrorCode::ParamOutOfBounds: return "ParamOutOfBounds";
    case ErrorCode::BadGeneratorId: return "BadGeneratorId";
    case ErrorCode::NoRemainingGrid: return "NoRemainingGrid";
    case ErrorCode::InvalidSliceCount: return "InvalidSliceCount";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonHermitianGenerator: return "NonHermitianGenerator";
    case ErrorCode::UnknownPulseFamily: return "UnknownPulseFamily";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::WriteFailure: return "WriteFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ordfact
