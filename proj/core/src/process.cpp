#include "nle/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nle/errors.hpp"
#include "nle/quadrature.hpp"

namespace nle {

namespace {

void check_cover(double horizon, const std::vector<MeasurePiece>& pieces) {
  if (pieces.empty()) fail(errc::config_invalid, "model needs at least one measure piece");
  double t = 0;
  for (const auto& p : pieces) {
    if (!p.measure) fail(errc::config_invalid, "measure piece without a measure");
    if (std::abs(p.t0 - t) > 1e-12 * (1 + horizon))
      fail(errc::config_invalid, "measure pieces must tile [0, horizon] in order");
    if (!(p.t1 > p.t0)) fail(errc::config_invalid, "measure piece with empty interval");
    if (!p.scale_fn && !(p.scale >= 0))
      fail(errc::config_invalid, "measure piece scale must be nonnegative");
    t = p.t1;
  }
  if (std::abs(t - horizon) > 1e-12 * (1 + horizon))
    fail(errc::config_invalid, "measure pieces must end at the horizon");
}

} // namespace

AdditiveModel::AdditiveModel(int d, double horizon, std::vector<DriftPiece> drift,
                             std::vector<MeasurePiece> pieces)
    : d_(d), horizon_(horizon), drift_(std::move(drift)), pieces_(std::move(pieces)) {
  if (d_ != 1 && d_ != 2) fail(errc::config_invalid, "model dimension must be 1 or 2");
  if (!(horizon_ > 0)) fail(errc::config_invalid, "model horizon must be positive");
  check_cover(horizon_, pieces_);
  for (const auto& p : pieces_)
    if (p.measure->dim() != d_) fail(errc::config_invalid, "measure piece dimension mismatch");
  double t = -1;
  for (const auto& dp : drift_) {
    if (static_cast<int>(dp.a.size()) != d_)
      fail(errc::config_invalid, "drift piece dimension mismatch");
    if (!(dp.t1 > dp.t0) || dp.t0 < t)
      fail(errc::config_invalid, "drift pieces must be ordered and nonempty");
    t = dp.t1;
  }
}

void AdditiveModel::check_window(double s, double t) const {
  if (s > t) fail(errc::time_order, "time window reversed: s > t");
  if (s < -1e-12 || t > horizon_ * (1 + 1e-12) + 1e-12)
    fail(errc::time_order, "time window exceeds [0, horizon]");
}

std::size_t AdditiveModel::piece_index(double t) const {
  check_window(std::max(t, 0.0), std::max(t, 0.0));
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (t < pieces_[i].t1 || i + 1 == pieces_.size()) return i;
  return pieces_.size() - 1;
}

std::vector<double> AdditiveModel::drift_at(double t) const {
  for (const auto& dp : drift_)
    if (t >= dp.t0 && (t < dp.t1 || t == horizon_)) return dp.a;
  return std::vector<double>(d_, 0.0);
}

std::complex<double> AdditiveModel::psi(double t, const std::vector<double>& xi) const {
  const auto& p = pieces_[piece_index(t)];
  const double sc = p.scale_fn ? p.scale_fn(t) : p.scale;
  std::complex<double> acc = sc * p.measure->symbol(xi);
  const auto a = drift_at(t);
  double dot = 0;
  for (int j = 0; j < d_; ++j) dot += a[j] * xi[j];
  return acc + std::complex<double>(0.0, dot);
}

std::vector<double> AdditiveModel::piece_weights(double s, double t) const {
  check_window(s, t);
  std::vector<double> w(pieces_.size(), 0.0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    const double lo = std::max(s, p.t0), hi = std::min(t, p.t1);
    if (hi <= lo) continue;
    if (!p.scale_fn) {
      w[i] = p.scale * (hi - lo);
    } else {
      std::vector<double> nodes, wts;
      gauss_legendre(16, lo, hi, nodes, wts);
      double acc = 0;
      for (std::size_t k = 0; k < nodes.size(); ++k) acc += wts[k] * p.scale_fn(nodes[k]);
      w[i] = acc;
    }
  }
  return w;
}

std::vector<double> AdditiveModel::drift_integral(double s, double t) const {
  check_window(s, t);
  std::vector<double> acc(d_, 0.0);
  for (const auto& dp : drift_) {
    const double lo = std::max(s, dp.t0), hi = std::min(t, dp.t1);
    if (hi <= lo) continue;
    for (int j = 0; j < d_; ++j) acc[j] += dp.a[j] * (hi - lo);
  }
  return acc;
}

std::complex<double> AdditiveModel::integrated_exponent(double s, double t,
                                                        const std::vector<double>& xi) const {
  const auto w = piece_weights(s, t);
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (w[i] != 0.0) acc += w[i] * pieces_[i].measure->symbol(xi);
  const auto ai = drift_integral(s, t);
  double dot = 0;
  for (int j = 0; j < d_; ++j) dot += ai[j] * xi[j];
  return acc + std::complex<double>(0.0, dot);
}

ModelPtr make_constant_model(LevyPtr measure, double horizon, std::vector<double> drift_vec) {
  const int d = measure->dim();
  std::vector<DriftPiece> drift;
  if (!drift_vec.empty()) drift.push_back({0.0, horizon, std::move(drift_vec)});
  std::vector<MeasurePiece> pieces{{0.0, horizon, 1.0, std::move(measure), nullptr}};
  return std::make_shared<AdditiveModel>(d, horizon, std::move(drift), std::move(pieces));
}

ModelPtr make_oscillating_model(LevyPtr measure, double horizon, int n_pieces, double lo,
                                double hi, std::vector<double> drift_vec) {
  if (n_pieces < 1) fail(errc::config_invalid, "oscillating profile needs >= 1 piece");
  const int d = measure->dim();
  std::vector<DriftPiece> drift;
  if (!drift_vec.empty()) drift.push_back({0.0, horizon, std::move(drift_vec)});
  std::vector<MeasurePiece> pieces;
  const double len = horizon / n_pieces;
  for (int i = 0; i < n_pieces; ++i)
    pieces.push_back({i * len, (i + 1 == n_pieces) ? horizon : (i + 1) * len,
                      (i % 2 == 0) ? lo : hi, measure, nullptr});
  return std::make_shared<AdditiveModel>(d, horizon, std::move(drift), std::move(pieces));
}

ModelPtr scale_process(const AdditiveModel& m, double c, double kappa) {
  if (!(c > 0) || !(kappa > 0)) fail(errc::config_invalid, "scale_process needs c, kappa > 0");
  const int d = m.dim();

  // image measures are shared between pieces referring to the same base
  std::vector<std::pair<const LevyMeasureModel*, LevyPtr>> cache;
  auto scaled_measure = [&](const LevyPtr& base) -> LevyPtr {
    for (auto& [k, v] : cache)
      if (k == base.get()) return v;
    auto img = std::make_shared<LevyMeasureModel>(base->scaled(c));
    cache.push_back({base.get(), img});
    return img;
  };

  std::vector<MeasurePiece> pieces;
  for (const auto& p : m.pieces()) {
    MeasurePiece np = p;
    np.measure = scaled_measure(p.measure);
    if (p.scale_fn) {
      auto f = p.scale_fn;
      np.scale_fn = [f, kappa](double t) { return kappa * f(t); };
    } else {
      np.scale = kappa * p.scale;
    }
    pieces.push_back(std::move(np));
  }

  // compensation window change: jumps with magnitude between c and 1 move
  // across the |y| <= 1 cutoff under y -> y/c
  std::vector<double> breaks{0.0, m.horizon()};
  for (const auto& dp : m.drift()) {
    breaks.push_back(dp.t0);
    breaks.push_back(dp.t1);
  }
  for (const auto& p : m.pieces()) {
    breaks.push_back(p.t0);
    breaks.push_back(p.t1);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [&](double a, double b) { return std::abs(a - b) < 1e-14; }),
               breaks.end());

  std::vector<DriftPiece> drift;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double t0 = breaks[i], t1 = breaks[i + 1];
    if (!(t1 > t0) || t0 >= m.horizon()) continue;
    const double tm = 0.5 * (t0 + t1);
    const auto& p = m.pieces()[m.piece_index(tm)];
    if (p.scale_fn && !p.measure->is_symmetric())
      fail(errc::config_invalid,
           "time-varying scale with an asymmetric measure is not supported by scale_process");
    const double sc = p.scale_fn ? 0.0 : p.scale;
    std::vector<double> fm =
        (c < 1.0) ? p.measure->band_first_moment(c, 1.0) : p.measure->band_first_moment(1.0, c);
    const double sign = (c < 1.0) ? 1.0 : -1.0;
    const auto a = m.drift_at(tm);
    std::vector<double> na(d, 0.0);
    bool nonzero = false;
    for (int j = 0; j < d; ++j) {
      na[j] = (kappa / c) * (a[j] - sign * sc * fm[j]);
      if (na[j] != 0.0) nonzero = true;
    }
    if (nonzero) drift.push_back({t0, t1, std::move(na)});
  }
  return std::make_shared<AdditiveModel>(d, m.horizon(), std::move(drift), std::move(pieces));
}

ModelPtr scaled_process(const AdditiveModel& m, const ScalingTriple& st, int j) {
  if (j < 0) fail(errc::config_invalid, "scaled_process level j must be >= 0");
  const double c = std::pow(st.c_s, -j);
  return scale_process(m, c, st.s(c));
}

TimeScaledFamily as_time_scaled_family(const ModelPtr& m) {
  const auto& pieces = m->pieces();
  for (const auto& p : pieces)
    if (p.measure.get() != pieces.front().measure.get())
      fail(errc::config_invalid, "family view requires a single base measure");
  ModelPtr keep = m;
  return TimeScaledFamily{
      pieces.front().measure,
      [keep](double t) {
        const auto& p = keep->pieces()[keep->piece_index(t)];
        return p.scale_fn ? p.scale_fn(t) : p.scale;
      },
      m->horizon()};
}

} // namespace nle
