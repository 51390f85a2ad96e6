#ifndef LEXCONTRAST_ERROR_H_
#define LEXCONTRAST_ERROR_H_

#include <stdexcept>
#include <string>

namespace lexcontrast {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line. Carries the source name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Input parsed but violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Caller asked for something the contract forbids.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A well-formed request that cannot be computed from the given data.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexcontrast

#endif  // LEXCONTRAST_ERROR_H_
