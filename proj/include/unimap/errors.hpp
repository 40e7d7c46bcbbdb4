#pragma once

#include <stdexcept>

namespace unimap {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error { public: using Error::Error; };
class EvenCycleError : public Error { public: using Error::Error; };
class LengthMismatchError : public Error { public: using Error::Error; };
class MinimalElementError : public Error { public: using Error::Error; };
class ArityMismatchError : public Error { public: using Error::Error; };
class NotOneCycleError : public Error { public: using Error::Error; };
class NotPermissibleError : public Error { public: using Error::Error; };
class NotAShapeTreeError : public Error { public: using Error::Error; };
class EmptyTreeError : public Error { public: using Error::Error; };
class CapExceededError : public Error { public: using Error::Error; };
class ZeroPolynomialError : public Error { public: using Error::Error; };
class DisagreementError : public Error { public: using Error::Error; };
class NonIntegralError : public Error { public: using Error::Error; };
class OrderMismatchError : public Error { public: using Error::Error; };

}  // namespace unimap
