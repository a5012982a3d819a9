#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Precondition or semantic failure in an otherwise well-formed input.
// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or flag value. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsym
