#pragma once

#include <stdexcept>
#include <string>

namespace curvesig {

/// Base class for all input-domain violations raised by this library.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotSymmetric final : DomainError {
  using DomainError::DomainError;
};

struct Singular final : DomainError {
  using DomainError::DomainError;
};

struct DimensionMismatch final : DomainError {
  using DomainError::DomainError;
};

struct ZeroVector final : DomainError {
  using DomainError::DomainError;
};

struct GenusMismatch final : DomainError {
  using DomainError::DomainError;
};

struct MissingValue final : DomainError {
  using DomainError::DomainError;
};

struct DegreeTooSmall final : DomainError {
  using DomainError::DomainError;
};

struct LassoUndefined final : DomainError {
  using DomainError::DomainError;
};

struct ZeroBidegree final : DomainError {
  using DomainError::DomainError;
};

struct NotASingularPoint final : DomainError {
  using DomainError::DomainError;
};

struct SingularMatrix final : DomainError {
  using DomainError::DomainError;
};

struct WrongDegree final : DomainError {
  using DomainError::DomainError;
};

struct NegativeCount final : DomainError {
  using DomainError::DomainError;
};

struct ParseError final : DomainError {
  using DomainError::DomainError;
};

/// Raised when an internal consistency assertion fails; always a bug,
/// never a consequence of bad input.
struct FormNotSymmetric final : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace curvesig
