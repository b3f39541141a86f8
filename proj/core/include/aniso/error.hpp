#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aniso {

enum class ErrorCode {
  invalid_argument,
  invalid_integrand,
  invalid_window,
  invalid_polygon,
  degenerate_region,
  boolean_failure,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Library error carrying a machine-readable code. Domain errors on
/// evaluation (zero vector, closed arc) use std::domain_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aniso
