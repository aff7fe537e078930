#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symlval {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (x >= 1 in a local factor, odd
// weight, kN below a guard, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A requested tolerance cannot be met, or an adaptive routine failed to
// converge.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class SquarefreeError : public DomainError {
 public:
  explicit SquarefreeError(std::uint64_t n);
  std::uint64_t value() const { return n_; }

 private:
  std::uint64_t n_;
};

// Coefficient data does not reach a prime the computation needs.
class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(std::uint64_t prime);
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

// Malformed coefficient file. `line` is 1-based; 0 when the problem is not
// tied to a single line (missing header, ...).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DeligneViolation : public ParseError {
 public:
  using ParseError::ParseError;
};

class RamifiedNormalizationError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Monte Carlo statistics became non-finite.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlval
