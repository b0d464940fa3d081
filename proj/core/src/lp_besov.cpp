#include "nle/lp_besov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nle/errors.hpp"

namespace nle {

namespace {

double bump(double v) {
  if (std::abs(v) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - v * v));
}

double freq_mag(const SpectralGrid& g, std::size_t flat) {
  const auto xi = g.freq_at(flat);
  double s = 0;
  for (double x : xi) s += x * x;
  return std::sqrt(s);
}

} // namespace

double block_profile(double n, double r) {
  if (!(n > 1)) fail(errc::config_invalid, "block profile ratio must exceed 1");
  if (!(r > 0)) return 0.0;
  const double u = std::log(r) / std::log(n);
  const double h = bump(u);
  if (h == 0.0) return 0.0;
  const double k = std::floor(u);
  const double den = bump(u - k) + bump(u - k - 1.0);
  return h / den;
}

LPFamily build_family(const SpectralGrid& g, double n_param) {
  if (!(n_param > 1)) fail(errc::config_invalid, "partition ratio must exceed 1");
  const double nyq = g.nyquist();
  const int j_max = static_cast<int>(std::floor(std::log(nyq) / std::log(n_param))) - 1;
  if (j_max < 1)
    fail(errc::grid_too_coarse, "nyquist " + std::to_string(nyq) +
                                    " leaves no complete annulus for ratio " +
                                    std::to_string(n_param));
  std::size_t in_first = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double m = freq_mag(g, k);
    if (m >= 1.0 && m <= n_param * n_param) ++in_first;
  }
  if (in_first < 8)
    fail(errc::grid_too_coarse,
         "first annulus [1, n^2] holds only " + std::to_string(in_first) + " grid frequencies");

  LPFamily fam{g, n_param, j_max, {}};
  fam.windows.assign(j_max + 1, std::vector<double>(g.size(), 0.0));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double m = freq_mag(g, k);
    double acc = 0;
    for (int j = 1; j <= j_max; ++j) {
      const double w = block_profile(n_param, m * std::pow(n_param, -j));
      fam.windows[j][k] = w;
      acc += w;
    }
    fam.windows[0][k] = std::max(1.0 - acc, 0.0);
  }
  return fam;
}

GridFunction block(const LPFamily& fam, const GridFunction& u, int j) {
  if (j < 0 || j > fam.j_max) fail(errc::config_invalid, "block index out of range");
  const GridFunction uhat = u.domain == Domain::frequency ? u : to_frequency(u);
  if (!(uhat.grid == fam.grid)) fail(errc::config_invalid, "grid mismatch in block projection");
  GridFunction out = uhat;
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= fam.windows[j][k];
  return from_frequency(out);
}

std::vector<double> smoothed_window1(const LPFamily& fam) {
  std::vector<double> w(fam.grid.size(), 0.0);
  const double n = fam.n_param;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double m = freq_mag(fam.grid, k);
    w[k] = block_profile(n, m / n) + block_profile(n, m) + block_profile(n, m * n);
  }
  return w;
}

std::vector<double> smoothed_window0(const LPFamily& fam) {
  std::vector<double> w(fam.grid.size(), 0.0);
  for (std::size_t k = 0; k < w.size(); ++k)
    w[k] = fam.windows[0][k] + (fam.j_max >= 1 ? fam.windows[1][k] : 0.0);
  return w;
}

BesovResult besov_norm(const GridFunction& u, const LPFamily& fam, const ScalingFn& s,
                       double gamma, double p, double q) {
  if (!(q > 0)) fail(errc::config_invalid, "besov q must be positive");
  BesovResult res;
  const GridFunction uhat = u.domain == Domain::frequency ? u : to_frequency(u);
  for (int j = 0; j <= fam.j_max; ++j) {
    GridFunction piece = uhat;
    for (std::size_t k = 0; k < piece.values.size(); ++k) piece.values[k] *= fam.windows[j][k];
    res.block_norms.push_back(lp_norm(from_frequency(piece), p));
    res.weights.push_back(j == 0 ? 1.0
                                 : std::pow(s(std::pow(fam.n_param, -j)), -gamma / 2.0));
  }
  auto tail_norm = [&](int up_to) {
    if (std::isinf(q)) {
      double mx = 0;
      for (int j = 1; j <= up_to; ++j) mx = std::max(mx, res.weights[j] * res.block_norms[j]);
      return mx;
    }
    double acc = 0;
    for (int j = 1; j <= up_to; ++j) acc += std::pow(res.weights[j] * res.block_norms[j], q);
    return std::pow(acc, 1.0 / q);
  };
  const double full = tail_norm(fam.j_max);
  const double without_last = fam.j_max >= 1 ? tail_norm(fam.j_max - 1) : 0.0;
  res.value = res.block_norms[0] + full;
  res.last_block_share = full > 0 ? (full - without_last) / full : 0.0;
  res.truncation_warn = res.last_block_share > 1e-8;
  return res;
}

namespace {

double multiplier_norm(const GridFunction& u,
                       const std::function<double(const std::vector<double>&)>& psi, double gamma,
                       double p, bool inhomogeneous) {
  const GridFunction uhat = u.domain == Domain::frequency ? u : to_frequency(u);
  GridFunction out = apply_multiplier(uhat, [&](const std::vector<double>& xi) {
    const double ps = psi(xi);
    if (ps > 1e-12)
      fail(errc::nonfinite_multiplier, "symbol section must be nonpositive; got " +
                                           std::to_string(ps));
    const double base = inhomogeneous ? 1.0 - ps : -ps;
    if (base == 0.0) return std::complex<double>(0.0, 0.0);
    return std::complex<double>(std::pow(base, gamma / 2.0), 0.0);
  });
  return lp_norm(from_frequency(out), p);
}

} // namespace

double bessel_norm(const GridFunction& u,
                   const std::function<double(const std::vector<double>&)>& psi, double gamma,
                   double p) {
  return multiplier_norm(u, psi, gamma, p, true);
}

double bessel_seminorm(const GridFunction& u,
                       const std::function<double(const std::vector<double>&)>& psi, double gamma,
                       double p) {
  return multiplier_norm(u, psi, gamma, p, false);
}

} // namespace nle
