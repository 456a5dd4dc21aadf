#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srank {

enum class ErrorCode {
  index_out_of_range,
  duplicate_entry,
  symmetry_violation,
  dimension_mismatch,
  order_mismatch,
  size_guard_exceeded,
  zero_tensor,
  unsupported_class,
  not_normalized,
  wrong_order,
  not_symmetric,
  not_antisymmetric,
  dependent_vectors,
  not_in_irreducible,
  wrong_class,
  non_finite,
  invalid_argument,
  no_convergence,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "index out of range";
    case ErrorCode::duplicate_entry: return "duplicate entry";
    case ErrorCode::symmetry_violation: return "symmetry violation";
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::order_mismatch: return "order mismatch";
    case ErrorCode::size_guard_exceeded: return "size guard exceeded";
    case ErrorCode::zero_tensor: return "zero tensor";
    case ErrorCode::unsupported_class: return "unsupported symmetry class";
    case ErrorCode::not_normalized: return "tensor not normalized";
    case ErrorCode::wrong_order: return "wrong order";
    case ErrorCode::not_symmetric: return "not symmetric";
    case ErrorCode::not_antisymmetric: return "not antisymmetric";
    case ErrorCode::dependent_vectors: return "linearly dependent vectors";
    case ErrorCode::not_in_irreducible: return "tensor not in irreducible subspace";
    case ErrorCode::wrong_class: return "wrong class";
    case ErrorCode::non_finite: return "non-finite coefficient";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::no_convergence: return "no convergence";
    case ErrorCode::parse_error: return "parse error";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                          : std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of the numerical kernels rather than of the input.
  bool is_numeric_failure() const noexcept { return code_ == ErrorCode::no_convergence; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = {}) {
  throw Error(code, detail);
}

}  // namespace srank
