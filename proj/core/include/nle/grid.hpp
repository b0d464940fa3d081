#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace nle {

/// Uniform periodic grid on the centered torus [-L/2, L/2)^d, d in {1, 2},
/// n points per axis (n even). Grid points x_i = -L/2 + i L/n; frequencies
/// xi_k = (2 pi / L) k with signed integer k in [-n/2, n/2).
struct SpectralGrid {
  int d = 1;
  int n = 0;
  double length = 0;

  SpectralGrid() = default;
  SpectralGrid(int d_, int n_, double length_);

  double dx() const { return length / n; }
  double dxi() const;
  double nyquist() const; // pi n / L, the boundary |xi| per axis
  std::size_t size() const;

  double x(int i) const { return -0.5 * length + i * dx(); }
  /// signed frequency index for storage index k in [0, n)
  int signed_index(int k) const { return k < n / 2 ? k : k - n; }
  double freq(int k) const { return dxi() * signed_index(k); }

  /// frequency vector for a flat row-major storage index
  std::vector<double> freq_at(std::size_t flat) const;
  /// grid point for a flat row-major storage index
  std::vector<double> point_at(std::size_t flat) const;

  bool operator==(const SpectralGrid& o) const {
    return d == o.d && n == o.n && length == o.length;
  }
};

enum class Domain { space, frequency };

/// Sampled complex field on a SpectralGrid, tagged with its domain.
/// Frequency-domain values follow the convention
///   u(x) = sum_k uhat[k] e^{i xi_k . x},
/// so a pure mode e^{i xi_k . x} has exactly one unit coefficient and
/// Parseval reads ||u||_2^2 = L^d sum_k |uhat[k]|^2.
struct GridFunction {
  SpectralGrid grid;
  Domain domain = Domain::space;
  std::vector<std::complex<double>> values;

  GridFunction() = default;
  GridFunction(SpectralGrid g, Domain dom);
};

/// Samples f at the grid points (space domain).
GridFunction sample_on_grid(const SpectralGrid& g,
                            const std::function<std::complex<double>(const std::vector<double>&)>& f);

/// FFT to frequency domain; throws errc::domain_tag if already there.
GridFunction to_frequency(const GridFunction& u);
/// Inverse FFT to space domain; throws errc::domain_tag if already there.
GridFunction from_frequency(const GridFunction& uhat);

/// Pointwise multiplication of a frequency-domain function by m(xi).
/// Throws errc::domain_tag on a space-domain input and
/// errc::nonfinite_multiplier if m produces a non-finite value.
GridFunction apply_multiplier(const GridFunction& uhat,
                              const std::function<std::complex<double>(const std::vector<double>&)>& m);

/// L^p norm of a space-domain function via the Riemann sum with weight dx^d;
/// p in (0, inf], p = inf gives the grid max of |u|.
double lp_norm(const GridFunction& u, double p);

} // namespace nle
