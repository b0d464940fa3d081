#pragma once

#include <functional>
#include <vector>

namespace nle {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]; b may be +infinity.
/// Throws errc::quadrature_fail if the error estimate exceeds
/// rel_tol * max(|value|, abs_floor).
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_floor = 1e-300);

/// Gauss-Legendre rule with n points mapped to [a, b]; n in {8, 16, 32, 64}.
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

} // namespace nle
