#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on chains of different length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Spin, coupling or step index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class UndefinedOverlapError : public Error {
 public:
  using Error::Error;
};

// Chain too short for the requested construction.
class UnsupportedLengthError : public Error {
 public:
  using Error::Error;
};

// Dense oracle asked to exceed its configured spin cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ScheduleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace spinchain
