#include "nle/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nle/errors.hpp"

namespace nle {

ScalingFn ScalingFn::power(double alpha) {
  ScalingFn f;
  f.kind_ = Kind::power;
  f.alpha_ = alpha;
  return f;
}

ScalingFn ScalingFn::table(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) fail(errc::config_invalid, "scaling table needs >= 2 samples");
  ScalingFn f;
  f.kind_ = Kind::table;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto [r, v] = samples[i];
    if (r <= 0 || v <= 0) fail(errc::config_invalid, "scaling table entries must be positive");
    if (i > 0 && r <= samples[i - 1].first)
      fail(errc::config_invalid, "scaling table r values must be strictly increasing");
    f.log_r_.push_back(std::log(r));
    f.log_v_.push_back(std::log(v));
  }
  return f;
}

ScalingFn ScalingFn::callback(std::function<double(double)> fn) {
  ScalingFn f;
  f.kind_ = Kind::callback;
  f.fn_ = std::move(fn);
  return f;
}

double ScalingFn::operator()(double r) const {
  if (!(r > 0)) fail(errc::config_invalid, "scaling function evaluated at r <= 0");
  switch (kind_) {
    case Kind::power:
      return std::pow(r, alpha_);
    case Kind::callback:
      return fn_(r);
    case Kind::table: {
      const double lr = std::log(r);
      // segment index with end-slope extrapolation outside the table
      std::size_t hi = std::upper_bound(log_r_.begin(), log_r_.end(), lr) - log_r_.begin();
      if (hi == 0) hi = 1;
      if (hi == log_r_.size()) hi = log_r_.size() - 1;
      const std::size_t lo = hi - 1;
      const double w = (lr - log_r_[lo]) / (log_r_[hi] - log_r_[lo]);
      return std::exp(log_v_[lo] + w * (log_v_[hi] - log_v_[lo]));
    }
  }
  return 0;
}

std::vector<double> default_scaling_grid() {
  std::vector<double> g;
  g.reserve(401);
  for (int i = 0; i <= 400; ++i) g.push_back(std::pow(2.0, -20.0 + 0.1 * i));
  return g;
}

ScalingTriple derive_constants(ScalingFn s, ScalingFn s_lower, ScalingFn s_upper,
                               const std::vector<double>& sample_grid) {
  if (sample_grid.size() < 2) fail(errc::config_invalid, "scaling sample grid too small");
  std::vector<double> grid = sample_grid;
  std::sort(grid.begin(), grid.end());

  constexpr double slack = 1e-9;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double sr = s(r);
    if (!(sr > 0)) fail(errc::scaling_violation, "s not positive at r=" + std::to_string(r));
    for (std::size_t j = i; j < grid.size(); ++j) {
      const double R = grid[j];
      const double sR = s(R), ratio = R / r;
      const double lo = s_lower(ratio) * sr, hi = s_upper(ratio) * sr;
      if (sR < lo * (1 - slack) || sR > hi * (1 + slack)) {
        fail(errc::scaling_violation,
             "s_lower(R/r) s(r) <= s(R) <= s_upper(R/r) s(r) fails at r=" + std::to_string(r) +
                 " R=" + std::to_string(R) + " (lo=" + std::to_string(lo) +
                 " s(R)=" + std::to_string(sR) + " hi=" + std::to_string(hi) + ")");
      }
    }
  }

  ScalingTriple t{std::move(s), std::move(s_lower), std::move(s_upper), 0, 0, 0, 0, 1};
  int m = 0;
  for (int k = 1; k <= 64; ++k) {
    if (t.s_lower(std::pow(2.0, k)) > 1.0) {
      m = k;
      break;
    }
  }
  if (m == 0) fail(errc::no_ms, "no m <= 64 with s_lower(2^m) > 1");
  t.m_s = m;
  t.c_s = std::pow(2.0, m);
  t.theta0 = std::log(t.s_lower(t.c_s)) / std::log(t.c_s);
  t.theta1 = std::log(t.s_upper(t.c_s)) / std::log(t.c_s);

  // explicit corridor constant from the proof: only s(1), s_lower(1),
  // s_upper(1), s_lower(1/c_s), s_upper(c_s) enter
  const double s1 = t.s(1.0);
  const double su_cs = t.s_upper(t.c_s);
  const double c0 = std::max({su_cs * s1, su_cs / (t.s_lower(1.0) * s1),
                              t.s_upper(1.0) * s1 * su_cs,
                              1.0 / (t.s_lower(1.0 / t.c_s) * s1), 1.0});
  t.c0 = c0;
  return t;
}

CorridorReport check_corridor(const ScalingTriple& t, const std::vector<double>& grid) {
  CorridorReport rep{-1e300, 0};
  for (double r : grid) {
    const double sr = t.s(r);
    const double lo_exp = (r <= 1.0) ? t.theta1 : t.theta0;
    const double hi_exp = (r <= 1.0) ? t.theta0 : t.theta1;
    const double lo = std::pow(r, lo_exp) / t.c0;
    const double hi = std::pow(r, hi_exp) * t.c0;
    const double v = std::max(lo - sr, sr - hi) / sr;
    if (v > rep.max_violation) {
      rep.max_violation = v;
      rep.argmax_r = r;
    }
  }
  return rep;
}

} // namespace nle
