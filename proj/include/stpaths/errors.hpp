#ifndef STPATHS_ERRORS_HPP
#define STPATHS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stpaths {

/// Bad arguments from the caller (dead or out-of-range vertex, bad flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of an algorithm does not hold, e.g. a negative arc handed
/// to a shortest-path routine that needs non-negative weights.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NegativeCycle : public std::runtime_error {
 public:
  explicit NegativeCycle(std::size_t vertex)
      : std::runtime_error("negative cycle through vertex " + std::to_string(vertex)),
        vertex_(vertex) {}

  /// Internal (0-based) id of one vertex on the cycle.
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

/// No alpha-bounded st-path exists.
class EmptyPathSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stpaths

#endif  // STPATHS_ERRORS_HPP
