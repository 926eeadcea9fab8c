#pragma once

#include <stdexcept>
#include <string>

namespace quivrel {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Composition of morphisms whose endpoints do not match.
class composition_error : public error {
public:
  using error::error;
};

/// An element exceeds the degree a rewrite system was completed to.
class degree_overflow_error : public error {
public:
  using error::error;
};

/// Completion produced more rules than the configured cap allows.
class completion_overflow_error : public error {
public:
  completion_overflow_error(const std::string& what, int degree_reached)
      : error(what), degree_reached(degree_reached) {}
  int degree_reached;
};

/// A query outside the cases the library decides (e.g. a non-local
/// endomorphism ring at the bound).
class unsupported_case_error : public error {
public:
  using error::error;
};

/// Invalid input data (bad quiver, malformed presentation, bad config).
class invalid_input_error : public error {
public:
  using error::error;
};

}  // namespace quivrel
