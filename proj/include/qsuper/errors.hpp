#pragma once

#include <stdexcept>
#include <string>

namespace qsuper {

struct QsuperError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad input from the caller
struct UsageError : QsuperError {
  using QsuperError::QsuperError;
};

struct AlgebraError : QsuperError {
  using QsuperError::QsuperError;
};

struct NonHomogeneous : QsuperError {
  using QsuperError::QsuperError;
};

struct BarEquationUnsolvable : QsuperError {
  using QsuperError::QsuperError;
};

struct TriangularityViolation : QsuperError {
  using QsuperError::QsuperError;
};

struct LinearSolveFailure : QsuperError {
  using QsuperError::QsuperError;
};

struct PreconditionError : QsuperError {
  using QsuperError::QsuperError;
};

struct NoMatch : QsuperError {
  using QsuperError::QsuperError;
};

struct SpanMismatch : QsuperError {
  using QsuperError::QsuperError;
};

struct NotAdapted : QsuperError {
  using QsuperError::QsuperError;
};

struct UniquenessFailure : QsuperError {
  using QsuperError::QsuperError;
};

}  // namespace qsuper
