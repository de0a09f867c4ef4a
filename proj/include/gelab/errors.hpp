#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gelab {

// Enumeration refused because the graph (or the result family) is larger than
// the configured cap. Callers may raise the cap explicitly.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t size, std::size_t cap, const std::string& what)
      : std::runtime_error(what + ": " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

class InvalidDistribution : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class NotUniform : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class VertexSetMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class VertexNotFound : public std::out_of_range {
  using std::out_of_range::out_of_range;
};

class NotRational : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ZeroWeightVertex : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidK : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gelab
