#pragma once

#include <stdexcept>
#include <string>

namespace pathweights {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: out-of-range vertex, wrong cardinality, missing pair...
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// The requested size is beyond the configured enumeration cap.
class LimitExceeded : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

// An exact linear system that should be solvable is not, or a witness
// failed its final verification.
class RealizabilityViolation : public Error {
 public:
  using Error::Error;
};

// A certificate is missing triples, blocks, or anchors, or has blocks of
// the wrong size.
class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pathweights
