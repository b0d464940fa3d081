#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace nle {

/// Positive function of r > 0. Three representations: pure power r^alpha,
/// sampled table with log-linear interpolation (end slopes extrapolated),
/// or an arbitrary callback.
class ScalingFn {
public:
  static ScalingFn power(double alpha);
  /// samples: (r, value) pairs, r strictly increasing, values > 0.
  static ScalingFn table(std::vector<std::pair<double, double>> samples);
  static ScalingFn callback(std::function<double(double)> f);

  double operator()(double r) const;
  bool is_power() const { return kind_ == Kind::power; }
  double power_exponent() const { return alpha_; }

private:
  enum class Kind { power, table, callback };
  Kind kind_ = Kind::power;
  double alpha_ = 0;
  std::vector<double> log_r_, log_v_;
  std::function<double(double)> fn_;
};

/// A scaling triple (s, s_lower, s_upper) with derived constants.
/// Invariant after derive_constants: for all r <= R in the validation grid,
///   s_lower(R/r) * s(r) <= s(R) <= s_upper(R/r) * s(r).
struct ScalingTriple {
  ScalingFn s, s_lower, s_upper;
  int m_s = 0;       // smallest m >= 1 with s_lower(2^m) > 1
  double c_s = 0;    // 2^{m_s}
  double theta0 = 0; // log_{c_s} s_lower(c_s)
  double theta1 = 0; // log_{c_s} s_upper(c_s)
  double c0 = 1;     // corridor constant, >= 1
};

/// 401 log-spaced points spanning [2^-20, 2^20].
std::vector<double> default_scaling_grid();

/// Validates the two-sided scaling inequality on all ordered pairs from
/// sample_grid (relative slack 1e-9), then derives m_s, c_s, theta0, theta1
/// and the corridor constant c0. Throws errc::scaling_violation or
/// errc::no_ms (no m <= 64 with s_lower(2^m) > 1).
ScalingTriple derive_constants(ScalingFn s, ScalingFn s_lower, ScalingFn s_upper,
                               const std::vector<double>& sample_grid = default_scaling_grid());

struct CorridorReport {
  double max_violation = 0; // relative; <= 0 means the corridor holds everywhere
  double argmax_r = 0;
};

/// Evaluates the two-sided power corridor
///   c0^{-1} (r^{theta1} 1_{r<=1} + r^{theta0} 1_{r>1}) <= s(r)
///        <= c0 (r^{theta0} 1_{r<=1} + r^{theta1} 1_{r>1})
/// on the grid and reports the worst relative violation and where it occurs.
CorridorReport check_corridor(const ScalingTriple& t,
                              const std::vector<double>& grid = default_scaling_grid());

} // namespace nle
