#pragma once

#include <stdexcept>

namespace multifix {

// Instance content is unusable: bad syntax, schema, or metric axioms.
// The CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};

// An operation was invoked outside its domain: space too small, lambda out
// of range, unknown builtin name, exhausted search budget. Exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal guarantee failed; always a bug, never a data problem.
// Exit code 4.
class SelfCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace multifix
