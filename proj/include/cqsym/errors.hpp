#pragma once

#include <stdexcept>
#include <string>

namespace cqsym {

// Base for every error raised by the library. Command-line front ends map
// the subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ImproperColoring : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A resource guard refused the request (enumeration or vertex-count bound).
class SizeGuard : public Error {
 public:
  using Error::Error;
};

// A result the mathematics guarantees did not materialize. These signal an
// implementation bug or a falsified claim and must never be swallowed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NonIntegralDivision : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace cqsym
