#include "hypercount/error.hpp"

namespace hypercount {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::size_out_of_range: return "size-out-of-range";
    case ErrorKind::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::duplicate_edge: return "duplicate-edge";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::domain: return "domain";
    case ErrorKind::not_linear: return "not-linear";
    case ErrorKind::not_permutation: return "not-permutation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace hypercount
