#pragma once

#include <stdexcept>
#include <string>

namespace mdslab {

// Base for every error raised by the library. Each subclass names one failure
// kind so callers (and the Python bindings) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositeCharacteristic : public Error { public: using Error::Error; };
class ReducibleModulus : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class NonSquare : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class LengthMismatch : public Error { public: using Error::Error; };
class ZeroMatrix : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class BadDimension : public Error { public: using Error::Error; };
class BadInput : public Error { public: using Error::Error; };
class PartitionViolation : public Error { public: using Error::Error; };
class MismatchDetected : public Error { public: using Error::Error; };
class NotNmds : public Error { public: using Error::Error; };
class ShapeMismatch : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

}  // namespace mdslab
