#ifndef SUMDIST_ERROR_HPP
#define SUMDIST_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumdist {

// Every failure raised by the library derives from Error. The CLI maps
// `infeasible()` errors to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual bool infeasible() const noexcept { return false; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two vertices of a hypergraph lie in exactly the same edges, so the dual
/// would contain a repeated edge and no irregular labeling exists.
class DualDegenerate : public Error {
 public:
  DualDegenerate(std::uint32_t first, std::uint32_t second)
      : Error("vertices " + std::to_string(first) + " and " + std::to_string(second) +
              " have identical incidence sets"),
        first_(first),
        second_(second) {}
  bool infeasible() const noexcept override { return true; }
  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }

 private:
  std::uint32_t first_;
  std::uint32_t second_;
};

class EmptyNeighborhood : public Error {
 public:
  explicit EmptyNeighborhood(std::uint32_t vertex)
      : Error("vertex " + std::to_string(vertex) + " is isolated"), vertex_(vertex) {}
  bool infeasible() const noexcept override { return true; }
  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

/// A search or retry loop ran out of budget. For the exact solver the
/// optimum is known to lie in [lower, upper].
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t lower = 0, std::uint64_t upper = 0)
      : Error(what), lower_(lower), upper_(upper) {}
  bool infeasible() const noexcept override { return true; }
  std::uint64_t lower() const noexcept { return lower_; }
  std::uint64_t upper() const noexcept { return upper_; }

 private:
  std::uint64_t lower_;
  std::uint64_t upper_;
};

class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParamsOutOfRange : public Error {
 public:
  using Error::Error;
  bool infeasible() const noexcept override { return true; }
};

class InfeasibleParams : public Error {
 public:
  using Error::Error;
  bool infeasible() const noexcept override { return true; }
};

}  // namespace sumdist

#endif
