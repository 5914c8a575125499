#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coldsp {

/// Malformed edge-list or LP input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The instance admits no solution for the requested constraint.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration refused because the instance exceeds the node cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t nodes, std::size_t cap)
      : std::runtime_error("instance has " + std::to_string(nodes) +
                           " nodes, enumeration cap is " + std::to_string(cap)),
        nodes_(nodes),
        cap_(cap) {}
  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t nodes_;
  std::size_t cap_;
};

}  // namespace coldsp
