#pragma once

#include <stdexcept>
#include <string>

namespace chromabound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHROMABOUND_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

CHROMABOUND_ERROR(ZeroPolynomial);
CHROMABOUND_ERROR(InexactDivision);
CHROMABOUND_ERROR(InvalidEdge);
CHROMABOUND_ERROR(Disconnected);
CHROMABOUND_ERROR(MalformedGraph6);
CHROMABOUND_ERROR(InvalidSpec);
CHROMABOUND_ERROR(UnsupportedHost);
CHROMABOUND_ERROR(ZeroArgument);
CHROMABOUND_ERROR(DomainViolation);
CHROMABOUND_ERROR(InvalidOrder);
CHROMABOUND_ERROR(WrongChromaticNumber);
CHROMABOUND_ERROR(OrderTooLarge);

#undef CHROMABOUND_ERROR

}  // namespace chromabound
