#include "nle/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "nle/errors.hpp"

namespace nle {

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_floor) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0;
  double value = gauss_kronrod<double, 15>::integrate(f, a, b, 15, rel_tol, &err);
  if (!std::isfinite(value) ||
      err > rel_tol * std::max(std::abs(value), abs_floor) + 1e-300) {
    fail(errc::quadrature_fail,
         "adaptive integration did not converge: value=" + std::to_string(value) +
             " err=" + std::to_string(err) + " on [" + std::to_string(a) + "," +
             std::to_string(b) + "]");
  }
  return {value, err};
}

namespace {

template <int N>
void fill_gl(double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  using rule = boost::math::quadrature::gauss<double, N>;
  // boost stores the nonnegative half of the symmetric rule
  const auto& xs = rule::abscissa();
  const auto& ws = rule::weights();
  nodes.clear();
  weights.clear();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0) {
      nodes.push_back(mid);
      weights.push_back(ws[i] * half);
    } else {
      nodes.push_back(mid - half * xs[i]);
      weights.push_back(ws[i] * half);
      nodes.push_back(mid + half * xs[i]);
      weights.push_back(ws[i] * half);
    }
  }
}

} // namespace

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  switch (n) {
    case 8: fill_gl<8>(a, b, nodes, weights); break;
    case 16: fill_gl<16>(a, b, nodes, weights); break;
    case 32: fill_gl<32>(a, b, nodes, weights); break;
    case 64: fill_gl<64>(a, b, nodes, weights); break;
    default: fail(errc::config_invalid, "gauss_legendre order must be 8, 16, 32 or 64");
  }
}

} // namespace nle
