#include "hscs/core/errors.hpp"

namespace hscs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingDepth: return "MissingDepth";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::TooFewSeeds: return "TooFewSeeds";
    case ErrorCode::EmptySeedSet: return "EmptySeedSet";
    case ErrorCode::SingleImageGroup: return "SingleImageGroup";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingIntra: return "MissingIntra";
    case ErrorCode::NoGroundTruth: return "NoGroundTruth";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace hscs
