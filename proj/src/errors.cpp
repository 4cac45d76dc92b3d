#include "orbitmat/errors.hpp"

namespace orbitmat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Integrality: return "IntegralityError";
    case ErrorCode::FixedPoint: return "FixedPointError";
    case ErrorCode::EmptyBranch: return "EmptyBranchError";
    case ErrorCode::Overflow: return "OverflowError";
    case ErrorCode::EmptyInput: return "EmptyInputError";
    case ErrorCode::CyclePresent: return "CyclePresentError";
    case ErrorCode::NotNilpotent: return "NotNilpotentError";
    case ErrorCode::NotACycle: return "NotACycleError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRangeError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatchError";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceededError";
    case ErrorCode::InvalidArgument: return "InvalidArgumentError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace orbitmat
