#include "symlval/errors.hpp"

namespace symlval {

SquarefreeError::SquarefreeError(std::uint64_t n)
    : DomainError(std::to_string(n) + " is not squarefree"), n_(n) {}

InsufficientDataError::InsufficientDataError(std::uint64_t prime)
    : Error("no coefficient data for prime " + std::to_string(prime)),
      prime_(prime) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace symlval
