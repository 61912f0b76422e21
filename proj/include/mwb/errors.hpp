#pragma once

#include <stdexcept>
#include <string>

namespace mwb {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// No exact Laurent quotient exists. On cluster variables this falsifies a
/// Laurent-phenomenon claim.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class FrozenVertex : public Error {
 public:
  using Error::Error;
};

/// Quiver-predicted exchange partners disagree with the interval-module
/// prediction during the distinguished mutation sequence.
class SequenceMismatch : public Error {
 public:
  using Error::Error;
};

/// Quantum seed data violates q-commutation or compatibility.
class Incompatible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace mwb
