#include <aniso/error.hpp>

namespace aniso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_integrand: return "invalid_integrand";
    case ErrorCode::invalid_window: return "invalid_window";
    case ErrorCode::invalid_polygon: return "invalid_polygon";
    case ErrorCode::degenerate_region: return "degenerate_region";
    case ErrorCode::boolean_failure: return "boolean_failure";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace aniso
