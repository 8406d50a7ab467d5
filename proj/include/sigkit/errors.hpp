#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigkit {

// Base of every error thrown by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but numerically degenerate (zero denominator, constant signal, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class UnknownWavelet : public Error {
 public:
  explicit UnknownWavelet(const std::string& name)
      : Error("unknown wavelet '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Raised by sifting when the input no longer has enough extrema to build envelopes.
class InsufficientExtrema : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class MissingClass : public Error {
 public:
  explicit MissingClass(const std::string& label)
      : Error("missing or empty class directory for label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

}  // namespace sigkit
