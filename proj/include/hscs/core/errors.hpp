#ifndef HSCS_CORE_ERRORS_HPP
#define HSCS_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hscs {

enum class ErrorCode {
  MissingDepth,
  DimensionMismatch,
  EmptyGroup,
  ImageTooSmall,
  KTooLarge,
  TooFewSeeds,
  EmptySeedSet,
  SingleImageGroup,
  LengthMismatch,
  MissingIntra,
  NoGroundTruth,
  SolverFailure,
  IoError,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

class PipelineError : public std::runtime_error {
 public:
  PipelineError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hscs

#endif
