#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "nle/levy.hpp"
#include "nle/scaling.hpp"

namespace nle {

/// Constant drift vector on [t0, t1).
struct DriftPiece {
  double t0 = 0, t1 = 0;
  std::vector<double> a;
};

/// Jump-measure piece on [t0, t1): Lambda_t = scale(t) * measure, where
/// scale(t) is the constant `scale` unless `scale_fn` is set.
struct MeasurePiece {
  double t0 = 0, t1 = 0;
  double scale = 1;
  LevyPtr measure;
  std::function<double(double)> scale_fn; // optional time-varying scale
};

/// Additive process on [0, horizon] with bounded characteristics
/// (a(t), 0, Lambda_t): piecewise-constant drift, piecewise jump measure.
/// Symbol: Psi(t, xi) = i a(t).xi + scale(t) * psi_measure(xi).
/// Immutable and re-entrant.
class AdditiveModel {
public:
  AdditiveModel(int d, double horizon, std::vector<DriftPiece> drift,
                std::vector<MeasurePiece> pieces);

  int dim() const { return d_; }
  double horizon() const { return horizon_; }
  const std::vector<DriftPiece>& drift() const { return drift_; }
  const std::vector<MeasurePiece>& pieces() const { return pieces_; }

  std::complex<double> psi(double t, const std::vector<double>& xi) const;

  /// E(s, t, xi) = integral_s^t Psi(r, xi) dr. Exact piecewise sums for
  /// constant scales; 16-point Gauss-Legendre per piece overlap for
  /// callback scales. Throws errc::time_order unless 0 <= s <= t <= horizon.
  std::complex<double> integrated_exponent(double s, double t,
                                           const std::vector<double>& xi) const;

  /// integral over [s, t] of scale(r) dr, per measure piece (same order as
  /// pieces()); zero for pieces not meeting [s, t].
  std::vector<double> piece_weights(double s, double t) const;
  /// integral over [s, t] of a(r) dr.
  std::vector<double> drift_integral(double s, double t) const;

  /// drift vector at time t (zero if no drift pieces cover t)
  std::vector<double> drift_at(double t) const;
  /// measure piece index covering time t
  std::size_t piece_index(double t) const;

private:
  void check_window(double s, double t) const;
  int d_;
  double horizon_;
  std::vector<DriftPiece> drift_;
  std::vector<MeasurePiece> pieces_;
};

using ModelPtr = std::shared_ptr<const AdditiveModel>;

/// Time-homogeneous model: Lambda_t = measure for all t, constant drift.
ModelPtr make_constant_model(LevyPtr measure, double horizon,
                             std::vector<double> drift_vec = {});

/// Stress profile: scale(t) alternates lo, hi, lo, ... over n_pieces equal
/// subintervals of [0, horizon].
ModelPtr make_oscillating_model(LevyPtr measure, double horizon, int n_pieces, double lo,
                                double hi, std::vector<double> drift_vec = {});

/// General rescaling: the process with jump measure
/// kappa * Lambda_t(c dy), drift kappa/c * (a(t) - compensation correction),
/// where the correction is the first moment of Lambda_t over the magnitude
/// band between c and 1 (sign flips for c > 1).
ModelPtr scale_process(const AdditiveModel& m, double c, double kappa);

/// The level-j zoomed process: c = c_s^{-j}, kappa = s(c_s^{-j}).
/// Satisfies Psi(t, xi) = kappa^{-1} Psi_scaled(t, c xi) up to fp roundoff.
ModelPtr scaled_process(const AdditiveModel& m, const ScalingTriple& st, int j);

/// Scale profile of the model as a time-indexed family for the domination
/// checks (uses the scalar scale of each piece; all pieces must share one
/// base measure).
TimeScaledFamily as_time_scaled_family(const ModelPtr& m);

} // namespace nle
