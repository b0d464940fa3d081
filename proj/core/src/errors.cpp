#include "nle/errors.hpp"

namespace nle {

const char* errc_name(errc c) {
  switch (c) {
    case errc::scaling_violation: return "SCALING_VIOLATION";
    case errc::no_ms: return "NO_MS";
    case errc::quadrature_fail: return "QUADRATURE_FAIL";
    case errc::unbounded: return "UNBOUNDED";
    case errc::lower_bound_fail: return "LOWER_BOUND_FAIL";
    case errc::time_order: return "TIME_ORDER";
    case errc::domain_tag: return "DOMAIN_TAG";
    case errc::nonfinite_multiplier: return "NONFINITE_MULTIPLIER";
    case errc::grid_too_coarse: return "GRID_TOO_COARSE";
    case errc::envelope_fail: return "ENVELOPE_FAIL";
    case errc::degenerate: return "DEGENERATE";
    case errc::config_invalid: return "CONFIG_INVALID";
    case errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void fail(errc code, const std::string& detail) { throw Error(code, detail); }

} // namespace nle
