#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class NoSuchRoot : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class NoAntipode : public Error { using Error::Error; };
class NotInvertible : public Error { using Error::Error; };
class DoesNotDescend : public Error { using Error::Error; };
class Inconsistent : public Error { using Error::Error; };
class IncompleteNichols : public Error { using Error::Error; };
class NotInjectiveOnSupport : public Error { using Error::Error; };
class SchemaError : public Error { using Error::Error; };

// Raised when a resource bound is hit (tensor power or truncation too large).
class DimensionBlowup : public Error { using Error::Error; };

// Raised when a construction's own post-verification fails.
class VerificationFailure : public Error { using Error::Error; };

class DatumConditionViolation : public Error {
 public:
  DatumConditionViolation(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace hopf
