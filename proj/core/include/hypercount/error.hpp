#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercount {

enum class ErrorKind {
  size_out_of_range,
  vertex_out_of_range,
  parse,
  duplicate_edge,
  arity_mismatch,
  invalid_argument,
  domain,
  not_linear,
  not_permutation,
  precondition,
  infeasible,
  budget_exceeded,
  overflow,
  config,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is
/// stable and meant to be matched on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the hypergraph and config readers; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hypercount
