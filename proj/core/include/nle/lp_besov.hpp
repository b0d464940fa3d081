#pragma once

#include <functional>
#include <vector>

#include "nle/grid.hpp"
#include "nle/scaling.hpp"

namespace nle {

/// Smooth block profile: zeta(n, r) = h(u) / (h(u - k) + h(u - k - 1)) with
/// u = log_n r, k = floor(u), h(v) = exp(-1/(1-v^2)) on |v| < 1 (else 0).
/// Supported on (1/n, n), equal to 1 at r = 1, and the shifted copies
/// {zeta(n, n^{-j} r)}_{j in Z} sum to exactly 1 for every r > 0.
double block_profile(double n, double r);

/// Radial frequency partition on a grid: window j >= 1 has multiplier
/// zeta(n, n^{-j} |xi|) (support n^{j-1} < |xi| < n^{j+1}); window 0 is the
/// complement 1 - sum_{j>=1}. j_max = floor(log_n nyquist) - 1.
struct LPFamily {
  SpectralGrid grid;
  double n_param = 2;
  int j_max = 0;
  std::vector<std::vector<double>> windows; // windows[j], j = 0..j_max, per flat index
};

/// Builds the family; throws errc::grid_too_coarse when the first annulus
/// [1, n^2] holds fewer than 8 grid frequencies or j_max < 1.
LPFamily build_family(const SpectralGrid& g, double n_param);

/// Projection of u onto window j, returned in the space domain.
GridFunction block(const LPFamily& fam, const GridFunction& u, int j);

/// Three-window smoothing of the first annulus:
/// multiplier zeta(n,|xi|/n) + zeta(n,|xi|) + zeta(n,n|xi|), identically 1
/// on n^{-1} <= |xi| <= n and supported on (n^{-2}, n^{2}).
std::vector<double> smoothed_window1(const LPFamily& fam);
/// Low-block smoothing: windows 0 and 1 combined.
std::vector<double> smoothed_window0(const LPFamily& fam);

struct BesovResult {
  double value = 0;
  std::vector<double> block_norms;   // ||u * window_j||_p, j = 0..j_max
  std::vector<double> weights;       // s(c_s^{-j})^{-gamma/2}, j = 0..j_max (weight 1 at j=0)
  double last_block_share = 0;       // relative contribution of block j_max
  bool truncation_warn = false;      // last_block_share > 1e-8
};

/// Scaled Besov norm
///   ||u * w_0||_p + ( sum_{j>=1} (s(n^{-j})^{-gamma/2} ||u * w_j||_p)^q )^{1/q},
/// q in (0, inf] (q = inf takes the sup). The classical dyadic scale of
/// smoothness sigma is the special case s = power(1), n = 2, gamma = 2 sigma.
BesovResult besov_norm(const GridFunction& u, const LPFamily& fam, const ScalingFn& s,
                       double gamma, double p, double q);

/// Bessel-potential norm with multiplier (1 - psi(xi))^{gamma/2}; psi must be
/// a nonpositive real symbol section.
double bessel_norm(const GridFunction& u, const std::function<double(const std::vector<double>&)>& psi,
                   double gamma, double p);

/// Homogeneous variant with multiplier (-psi(xi))^{gamma/2}, set to 0 at the
/// zero frequency.
double bessel_seminorm(const GridFunction& u,
                       const std::function<double(const std::vector<double>&)>& psi, double gamma,
                       double p);

} // namespace nle
