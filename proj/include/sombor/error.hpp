#pragma once

#include <stdexcept>

namespace sombor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad modulus, bad offsets, unparsable text, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonLocalRing : public Error {
 public:
  using Error::Error;
};

// A closed form was requested for parameters outside the family it covers.
class OffFamily : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

class EmptySweep : public Error {
 public:
  using Error::Error;
};

}  // namespace sombor
