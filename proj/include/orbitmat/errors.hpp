#pragma once

#include <stdexcept>
#include <string>

namespace orbitmat {

enum class ErrorCode {
  Syntax,             // malformed spec text
  Integrality,        // rcwa branch violates a_j*j + b_j == 0 (mod d)
  FixedPoint,         // the described function has a fixed point
  EmptyBranch,        // rcwa branch a_j == d, b_j == 0 fixes a whole residue class
  Overflow,           // checked 64-bit arithmetic exceeded
  EmptyInput,
  CyclePresent,       // heights/orbits requested but the local function has a cycle
  NotNilpotent,
  NotACycle,          // eigenvector certificate failed verification
  IndexOutOfRange,
  DimensionMismatch,
  SizeLimitExceeded,
  InvalidArgument,
  Internal,           // a proven identity failed; indicates a bug
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Usage/parse errors exit 1, resource/overflow errors exit 2.
  int exit_code() const noexcept {
    return (code_ == ErrorCode::Overflow || code_ == ErrorCode::SizeLimitExceeded) ? 2 : 1;
  }

 private:
  ErrorCode code_;
};

}  // namespace orbitmat
