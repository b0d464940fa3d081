#pragma once

#include <stdexcept>
#include <string>

namespace nle {

/// Stable error codes. The uppercase name (errc_name) is part of the
/// diagnostic contract and appears verbatim in exception messages.
enum class errc {
  scaling_violation,
  no_ms,
  quadrature_fail,
  unbounded,
  lower_bound_fail,
  time_order,
  domain_tag,
  nonfinite_multiplier,
  grid_too_coarse,
  envelope_fail,
  degenerate,
  config_invalid,
  io_error,
};

const char* errc_name(errc c);

/// Exception carrying an errc; what() is "<CODE>: <detail>".
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& detail);
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& detail);

} // namespace nle
