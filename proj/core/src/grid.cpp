#include "nle/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nle/errors.hpp"

namespace nle {

SpectralGrid::SpectralGrid(int d_, int n_, double length_) : d(d_), n(n_), length(length_) {
  if (d != 1 && d != 2) fail(errc::config_invalid, "grid.d must be 1 or 2");
  if (n < 4 || n % 2 != 0) fail(errc::config_invalid, "grid.n must be even and >= 4");
  if (!(length > 0)) fail(errc::config_invalid, "grid.l must be positive");
}

double SpectralGrid::dxi() const { return 2.0 * std::numbers::pi / length; }
double SpectralGrid::nyquist() const { return std::numbers::pi * n / length; }

std::size_t SpectralGrid::size() const {
  return d == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
}

std::vector<double> SpectralGrid::freq_at(std::size_t flat) const {
  if (d == 1) return {freq(static_cast<int>(flat))};
  const int k1 = static_cast<int>(flat / n), k2 = static_cast<int>(flat % n);
  return {freq(k1), freq(k2)};
}

std::vector<double> SpectralGrid::point_at(std::size_t flat) const {
  if (d == 1) return {x(static_cast<int>(flat))};
  const int i1 = static_cast<int>(flat / n), i2 = static_cast<int>(flat % n);
  return {x(i1), x(i2)};
}

GridFunction::GridFunction(SpectralGrid g, Domain dom)
    : grid(g), domain(dom), values(g.size(), {0.0, 0.0}) {}

GridFunction sample_on_grid(
    const SpectralGrid& g,
    const std::function<std::complex<double>(const std::vector<double>&)>& f) {
  GridFunction u(g, Domain::space);
  for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] = f(g.point_at(i));
  return u;
}

namespace {

// sign of the phase factor (-1)^{k'1 + ... + k'd} that shifts the FFT origin
// to x = -L/2 in every axis
double origin_phase(const SpectralGrid& g, std::size_t flat) {
  int sum;
  if (g.d == 1) {
    sum = g.signed_index(static_cast<int>(flat));
  } else {
    sum = g.signed_index(static_cast<int>(flat / g.n)) +
          g.signed_index(static_cast<int>(flat % g.n));
  }
  return (sum & 1) ? -1.0 : 1.0;
}

void run_fft(const SpectralGrid& g, std::vector<std::complex<double>>& data, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = (g.d == 1) ? fftw_plan_dft_1d(g.n, ptr, ptr, sign, FFTW_ESTIMATE)
                              : fftw_plan_dft_2d(g.n, g.n, ptr, ptr, sign, FFTW_ESTIMATE);
  if (!plan) fail(errc::io_error, "fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

} // namespace

GridFunction to_frequency(const GridFunction& u) {
  if (u.domain != Domain::space)
    fail(errc::domain_tag, "to_frequency requires a space-domain input");
  GridFunction out = u;
  out.domain = Domain::frequency;
  run_fft(u.grid, out.values, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(u.grid.size());
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] *= scale * origin_phase(u.grid, k);
  return out;
}

GridFunction from_frequency(const GridFunction& uhat) {
  if (uhat.domain != Domain::frequency)
    fail(errc::domain_tag, "from_frequency requires a frequency-domain input");
  GridFunction out = uhat;
  out.domain = Domain::space;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] *= origin_phase(uhat.grid, k);
  run_fft(uhat.grid, out.values, FFTW_BACKWARD);
  return out;
}

GridFunction apply_multiplier(
    const GridFunction& uhat,
    const std::function<std::complex<double>(const std::vector<double>&)>& m) {
  if (uhat.domain != Domain::frequency)
    fail(errc::domain_tag, "apply_multiplier requires a frequency-domain input");
  GridFunction out = uhat;
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const std::complex<double> mk = m(uhat.grid.freq_at(k));
    if (!std::isfinite(mk.real()) || !std::isfinite(mk.imag()))
      fail(errc::nonfinite_multiplier,
           "multiplier non-finite at flat index " + std::to_string(k));
    out.values[k] *= mk;
  }
  return out;
}

double lp_norm(const GridFunction& u, double p) {
  if (u.domain != Domain::space) fail(errc::domain_tag, "lp_norm requires a space-domain input");
  if (!(p > 0)) fail(errc::config_invalid, "lp_norm requires p > 0");
  if (std::isinf(p)) {
    double mx = 0;
    for (const auto& v : u.values) mx = std::max(mx, std::abs(v));
    return mx;
  }
  const double cell = std::pow(u.grid.dx(), u.grid.d);
  double acc = 0;
  for (const auto& v : u.values) acc += std::pow(std::abs(v), p) * cell;
  return std::pow(acc, 1.0 / p);
}

} // namespace nle
