#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nle/grid.hpp"
#include "nle/lp_besov.hpp"
#include "nle/process.hpp"

namespace nle {

/// Memo of per-measure symbol sections over a fixed grid (optionally with a
/// dilated frequency argument). Not thread-safe; share within one driver.
class SymbolCache {
public:
  const std::vector<std::complex<double>>& section(const LevyPtr& m, const SpectralGrid& g,
                                                   double freq_scale);

private:
  struct Entry {
    const LevyMeasureModel* measure;
    SpectralGrid grid;
    double freq_scale;
    std::vector<std::complex<double>> values;
  };
  std::vector<Entry> entries_;
};

/// E(s, t, freq_scale * xi_k) for every grid frequency, as one flat array.
std::vector<std::complex<double>> exponent_grid(const AdditiveModel& m, double s, double t,
                                                const SpectralGrid& g, double freq_scale = 1.0,
                                                SymbolCache* cache = nullptr);

/// u(t) from u(s) = u0 by the exact Fourier multiplier exp(E(s, t, xi)).
/// Input and output are space-domain fields on the same grid.
GridFunction propagate(const AdditiveModel& m, const GridFunction& u0, double s, double t,
                       SymbolCache* cache = nullptr);

/// Inhomogeneous term integral_s^t exp(E(r, t, .)) f(r) dr with f sampled at
/// composite Gauss-Legendre nodes (nodes_per_piece per model piece overlap).
/// Accuracy degrades once |Psi| * piece length >> 100; raise nodes_per_piece
/// for stiff forcing.
GridFunction duhamel(const AdditiveModel& m,
                     const std::function<GridFunction(double)>& forcing, double s, double t,
                     int nodes_per_piece = 16, SymbolCache* cache = nullptr);

struct DensityResult {
  GridFunction density; // space domain
  double mass = 0;      // Riemann sum, equals exp(E(0)) up to fp
  double min_real = 0;
  double max_imag = 0;
  double nyquist_tail = 0; // max |exp(Re E)| on the frequency boundary
};

/// Transition density p(s, t, .) on the torus: inverse transform of
/// exp(E(s,t,xi)) / L^d. Throws errc::grid_too_coarse when the symbol has
/// not decayed at the Nyquist boundary (tail > nyquist_tail_tol).
DensityResult transition_density(const AdditiveModel& m, const SpectralGrid& g, double s,
                                 double t, double nyquist_tail_tol = 1e-13,
                                 SymbolCache* cache = nullptr);

struct DecayResult {
  std::vector<int> levels;
  std::vector<double> times;
  std::vector<std::vector<double>> masses; // masses[level][time]
  std::vector<double> slopes;              // least-squares d ln(mass) / dt
  std::vector<double> block0_masses;       // low-block reference at the same times
  double block0_bound_const = 0;           // max_t mass0 / (1 v t^{d0 - d/4})
};

/// l1 mass of the level-j frequency packet of the kernel:
///   mass_j(t) = || F^{-1}[ exp(E(0, t, c_s^j eta)) w~(eta) ] ||_1
/// with w~ the smoothed first-annulus window of the family with ratio c_s.
/// The low block uses the windows-0+1 multiplier without dilation.
DecayResult density_block_decay(const AdditiveModel& m, const ScalingTriple& st,
                                const SpectralGrid& g, const std::vector<double>& t_grid,
                                const std::vector<int>& levels, SymbolCache* cache = nullptr);

/// Graded partition of [0, T]: edges tau_i = T (i/M)^2. Returns midpoints
/// and cell lengths; resolves integrable t^{-a} singularities at t = 0.
void graded_time_rule(double T, int m, std::vector<double>& midpoints,
                      std::vector<double>& weights);

struct SpacetimeNormResult {
  double value = 0;      // at the requested resolution M
  double value_refined = 0; // at 2M
  double extrapolated = 0;  // Richardson combination
};

/// || u ||_{L_q((0,T); H^{gamma}_p)} where the spatial norm uses the Bessel
/// multiplier (1 - psi)^{gamma/2}; u(t) is propagated from u0 under m.
SpacetimeNormResult spacetime_norm(const AdditiveModel& m, const GridFunction& u0, double T,
                                   const std::function<double(const std::vector<double>&)>& psi,
                                   double gamma, double p, double q, int time_cells = 64,
                                   SymbolCache* cache = nullptr);

struct AprioriParams {
  double gamma = 1;
  double p = 2;
  double q = 2;
  int time_cells = 64;
  /// classical variant: numerator multiplier (1+|xi|^2)^{gamma/2},
  /// denominator the dyadic Besov scale of order gamma - alpha/q,
  /// normalization (1+T) instead of (1+T^2)
  bool classical = false;
  double alpha = 1; // used by the classical variant's Besov order
};

struct AprioriResult {
  double ratio = 0;
  double numerator = 0;
  double denominator = 0; // includes the (1+T^2) or (1+T) factor
  bool degenerate = false;
};

/// Ratio of the solution's space-time norm to the weighted initial-data
/// norm. u0 = 0 returns ratio 0 with the degenerate flag set.
AprioriResult apriori_ratio(const AdditiveModel& m, const GridFunction& u0,
                            const ScalingTriple& st, double T, const AprioriParams& params,
                            SymbolCache* cache = nullptr);

} // namespace nle
