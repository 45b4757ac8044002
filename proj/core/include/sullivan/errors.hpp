#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A presentation violated a structural requirement (d^2 != 0, a linear term
/// in some d(g), a degree mismatch, ...). Carries the offending generator.
class ValidationError : public Error {
public:
  ValidationError(std::string generator, const std::string& what)
      : Error(what), generator_(std::move(generator)) {}
  const std::string& generator() const { return generator_; }

private:
  std::string generator_;
};

/// Syntax error in a model file, with 1-based source position.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_ = 0;
  int column_ = 0;
};

/// A degreewise computation window was too small for the requested consumer.
class TruncationError : public Error {
public:
  TruncationError(int needed, const std::string& what) : Error(what), needed_(needed) {}
  int needed_degree() const { return needed_; }

private:
  int needed_ = 0;
};

/// A configured resource cap (dimension, expansion size, ...) was exceeded.
class CapError : public Error {
public:
  CapError(long long limit, long long requested, const std::string& what)
      : Error(what), limit_(limit), requested_(requested) {}
  long long limit() const { return limit_; }
  long long requested() const { return requested_; }

private:
  long long limit_ = 0;
  long long requested_ = 0;
};

/// A theorem's hypotheses could not be verified; the operation refuses to
/// apply the formula rather than guessing.
class HypothesisError : public Error {
public:
  using Error::Error;
};

}  // namespace sullivan
