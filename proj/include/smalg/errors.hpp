#pragma once

#include <stdexcept>
#include <string>

namespace smalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class AntisymmetryError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class OddOrderUnsupported : public Error {
 public:
  using Error::Error;
};

class InvalidSemigroup : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class ClosureError : public Error {
 public:
  using Error::Error;
};

class NoZeroElement : public Error {
 public:
  using Error::Error;
};

class NotResonant : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or value string.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace smalg
