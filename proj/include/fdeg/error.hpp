#pragma once

#include <stdexcept>
#include <string>

namespace fdeg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (cycle text, group files, hints).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured search budget or size limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The group has a nontrivial abelian normal subgroup.
class NotFittingFree : public Error {
 public:
  using Error::Error;
};

/// The computation reached a case this library does not decide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A table row needs an explicit isomorphism to a matrix group.
class HintRequired : public Error {
 public:
  using Error::Error;
};

}  // namespace fdeg
