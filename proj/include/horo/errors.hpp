#pragma once

#include <stdexcept>
#include <string>

namespace horo {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A descriptor or value could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested sweep or rank exceeds the configured cap.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested evaluation is outside what the engine models.
class UnsupportedEvaluation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A derived quantity disagrees with a reference closed form.
/// Always a hard failure: the message names the subject, the column and both
/// values.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace horo
