#pragma once

#include <stdexcept>
#include <string>

namespace rigikit {

// Base of every error raised by the toolkit. Precondition violations are
// reported by throwing one of the subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class EdgeAbsentError : public Error {
 public:
  using Error::Error;
};

class DuplicateNeighborError : public Error {
 public:
  using Error::Error;
};

class HingeError : public Error {
 public:
  using Error::Error;
};

class SharedEdgeError : public Error {
 public:
  using Error::Error;
};

class SharedCliqueError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class InfeasibleSpecError : public Error {
 public:
  using Error::Error;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  using Error::Error;
};

}  // namespace rigikit
