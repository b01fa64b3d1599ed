#ifndef SHF_ERRORS_HPP
#define SHF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shf {

// Input lies outside an operation's domain (bad parameters, invalid weights).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A row contains a symbol >= q.
class SymbolError : public DomainError {
public:
  using DomainError::DomainError;
};

// A bound was requested outside the parameter range in which it is proven.
class RangeError : public DomainError {
public:
  using DomainError::DomainError;
};

// A theorem's hypothesis (t, u) does not hold for the requested bound.
class HypothesisError : public DomainError {
public:
  using DomainError::DomainError;
};

// Malformed matrix text. line() is 1-based; 0 means end of input.
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace shf

#endif // SHF_ERRORS_HPP
