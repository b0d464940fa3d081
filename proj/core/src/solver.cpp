#include "nle/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nle/errors.hpp"
#include "nle/quadrature.hpp"

namespace nle {

const std::vector<std::complex<double>>& SymbolCache::section(const LevyPtr& m,
                                                              const SpectralGrid& g,
                                                              double freq_scale) {
  for (const auto& e : entries_)
    if (e.measure == m.get() && e.grid == g && e.freq_scale == freq_scale) return e.values;
  Entry e{m.get(), g, freq_scale, {}};
  e.values.resize(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto xi = g.freq_at(k);
    for (double& x : xi) x *= freq_scale;
    e.values[k] = m->symbol(xi);
  }
  entries_.push_back(std::move(e));
  return entries_.back().values;
}

std::vector<std::complex<double>> exponent_grid(const AdditiveModel& m, double s, double t,
                                                const SpectralGrid& g, double freq_scale,
                                                SymbolCache* cache) {
  if (m.dim() != g.d) fail(errc::config_invalid, "model/grid dimension mismatch");
  SymbolCache local;
  SymbolCache& c = cache ? *cache : local;
  const auto weights = m.piece_weights(s, t);
  std::vector<std::complex<double>> e(g.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const auto& sec = c.section(m.pieces()[i].measure, g, freq_scale);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += weights[i] * sec[k];
  }
  const auto ai = m.drift_integral(s, t);
  bool has_drift = false;
  for (double a : ai) has_drift = has_drift || a != 0.0;
  if (has_drift) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      const auto xi = g.freq_at(k);
      double dot = 0;
      for (int j = 0; j < g.d; ++j) dot += ai[j] * freq_scale * xi[j];
      e[k] += std::complex<double>(0.0, dot);
    }
  }
  return e;
}

GridFunction propagate(const AdditiveModel& m, const GridFunction& u0, double s, double t,
                       SymbolCache* cache) {
  const auto e = exponent_grid(m, s, t, u0.grid, 1.0, cache);
  GridFunction uhat = u0.domain == Domain::frequency ? u0 : to_frequency(u0);
  for (std::size_t k = 0; k < uhat.values.size(); ++k) uhat.values[k] *= std::exp(e[k]);
  return from_frequency(uhat);
}

GridFunction duhamel(const AdditiveModel& m,
                     const std::function<GridFunction(double)>& forcing, double s, double t,
                     int nodes_per_piece, SymbolCache* cache) {
  if (nodes_per_piece != 8 && nodes_per_piece != 16 && nodes_per_piece != 32 &&
      nodes_per_piece != 64)
    fail(errc::config_invalid, "duhamel nodes_per_piece must be 8, 16, 32 or 64");
  SymbolCache local;
  SymbolCache& c = cache ? *cache : local;

  std::vector<double> cuts{s, t};
  for (const auto& p : m.pieces()) {
    if (p.t0 > s && p.t0 < t) cuts.push_back(p.t0);
    if (p.t1 > s && p.t1 < t) cuts.push_back(p.t1);
  }
  std::sort(cuts.begin(), cuts.end());

  GridFunction first = forcing(s);
  const SpectralGrid g = first.grid;
  GridFunction acc(g, Domain::frequency);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    std::vector<double> nodes, wts;
    gauss_legendre(nodes_per_piece, cuts[i], cuts[i + 1], nodes, wts);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      GridFunction f = forcing(nodes[k]);
      if (!(f.grid == g)) fail(errc::config_invalid, "forcing grid changed between samples");
      GridFunction fhat = f.domain == Domain::frequency ? f : to_frequency(f);
      const auto e = exponent_grid(m, nodes[k], t, g, 1.0, &c);
      for (std::size_t idx = 0; idx < acc.values.size(); ++idx)
        acc.values[idx] += wts[k] * std::exp(e[idx]) * fhat.values[idx];
    }
  }
  return from_frequency(acc);
}

DensityResult transition_density(const AdditiveModel& m, const SpectralGrid& g, double s,
                                 double t, double nyquist_tail_tol, SymbolCache* cache) {
  const auto e = exponent_grid(m, s, t, g, 1.0, cache);
  double tail = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    bool boundary;
    if (g.d == 1) {
      boundary = static_cast<int>(k) == g.n / 2;
    } else {
      const int k1 = static_cast<int>(k) / g.n, k2 = static_cast<int>(k) % g.n;
      boundary = k1 == g.n / 2 || k2 == g.n / 2;
    }
    if (boundary) tail = std::max(tail, std::exp(e[k].real()));
  }
  if (tail > nyquist_tail_tol)
    fail(errc::grid_too_coarse, "symbol tail " + std::to_string(tail) +
                                    " at the Nyquist boundary exceeds " +
                                    std::to_string(nyquist_tail_tol));

  GridFunction phat(g, Domain::frequency);
  const double cell = std::pow(g.length, g.d);
  for (std::size_t k = 0; k < e.size(); ++k) phat.values[k] = std::exp(e[k]) / cell;
  DensityResult res{from_frequency(phat), 0, 0, 0, tail};
  const double dv = std::pow(g.dx(), g.d);
  double mass = 0, mn = 1e300, mi = 0;
  for (const auto& v : res.density.values) {
    mass += v.real() * dv;
    mn = std::min(mn, v.real());
    mi = std::max(mi, std::abs(v.imag()));
  }
  res.mass = mass;
  res.min_real = mn;
  res.max_imag = mi;
  return res;
}

namespace {

void fit_line(const std::vector<double>& x, const std::vector<double>& y, double& slope,
              double& intercept) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  slope = sxy / sxx;
  intercept = my - slope * mx;
}

} // namespace

DecayResult density_block_decay(const AdditiveModel& m, const ScalingTriple& st,
                                const SpectralGrid& g, const std::vector<double>& t_grid,
                                const std::vector<int>& levels, SymbolCache* cache) {
  if (t_grid.size() < 2) fail(errc::config_invalid, "decay needs >= 2 times");
  SymbolCache local;
  SymbolCache& c = cache ? *cache : local;
  const LPFamily fam = build_family(g, st.c_s);
  const auto w1 = smoothed_window1(fam);
  const auto w0 = smoothed_window0(fam);

  DecayResult res;
  res.levels = levels;
  res.times = t_grid;
  auto packet_mass = [&](const std::vector<double>& window, double dilate, double t) {
    const auto e = exponent_grid(m, 0.0, t, g, dilate, &c);
    GridFunction f(g, Domain::frequency);
    for (std::size_t k = 0; k < f.values.size(); ++k)
      f.values[k] = std::exp(e[k]) * window[k];
    return lp_norm(from_frequency(f), 1.0);
  };

  for (int j : levels) {
    if (j < 1) fail(errc::config_invalid, "decay levels must be >= 1");
    std::vector<double> row;
    for (double t : t_grid) row.push_back(packet_mass(w1, std::pow(st.c_s, j), t));
    res.masses.push_back(row);
  }
  for (double t : t_grid) res.block0_masses.push_back(packet_mass(w0, 1.0, t));

  for (const auto& row : res.masses) {
    std::vector<double> lm;
    for (double v : row) lm.push_back(std::log(std::max(v, 1e-300)));
    double slope, itc;
    fit_line(res.times, lm, slope, itc);
    res.slopes.push_back(slope);
  }
  const int d0 = g.d / 4 + 1;
  double bc = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    bc = std::max(bc, res.block0_masses[i] /
                          std::max(1.0, std::pow(t_grid[i], d0 - g.d / 4.0)));
  res.block0_bound_const = bc;
  return res;
}

void graded_time_rule(double T, int m, std::vector<double>& midpoints,
                      std::vector<double>& weights) {
  if (!(T > 0) || m < 2) fail(errc::config_invalid, "graded rule needs T > 0 and >= 2 cells");
  midpoints.clear();
  weights.clear();
  double prev = 0;
  for (int i = 1; i <= m; ++i) {
    const double edge = T * (static_cast<double>(i) / m) * (static_cast<double>(i) / m);
    midpoints.push_back(0.5 * (prev + edge));
    weights.push_back(edge - prev);
    prev = edge;
  }
}

SpacetimeNormResult spacetime_norm(const AdditiveModel& m, const GridFunction& u0, double T,
                                   const std::function<double(const std::vector<double>&)>& psi,
                                   double gamma, double p, double q, int time_cells,
                                   SymbolCache* cache) {
  if (!(q > 0)) fail(errc::config_invalid, "spacetime norm needs q > 0");
  SymbolCache local;
  SymbolCache& c = cache ? *cache : local;
  const SpectralGrid g = u0.grid;
  const GridFunction uhat = u0.domain == Domain::frequency ? u0 : to_frequency(u0);

  std::vector<double> mult(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double ps = psi(g.freq_at(k));
    if (ps > 1e-12) fail(errc::nonfinite_multiplier, "symbol section must be nonpositive");
    mult[k] = std::pow(1.0 - ps, gamma / 2.0);
  }

  auto norm_at = [&](double t) {
    const auto e = exponent_grid(m, 0.0, t, g, 1.0, &c);
    GridFunction f(g, Domain::frequency);
    for (std::size_t k = 0; k < f.values.size(); ++k)
      f.values[k] = std::exp(e[k]) * uhat.values[k] * mult[k];
    return lp_norm(from_frequency(f), p);
  };
  auto level_norm = [&](int cells) {
    std::vector<double> mid, wts;
    graded_time_rule(T, cells, mid, wts);
    if (std::isinf(q)) {
      double mx = 0;
      for (double t : mid) mx = std::max(mx, norm_at(t));
      return mx;
    }
    double acc = 0;
    for (std::size_t i = 0; i < mid.size(); ++i) acc += wts[i] * std::pow(norm_at(mid[i]), q);
    return std::pow(acc, 1.0 / q);
  };

  SpacetimeNormResult res;
  res.value = level_norm(time_cells);
  res.value_refined = level_norm(2 * time_cells);
  res.extrapolated = res.value_refined + (res.value_refined - res.value) / 3.0;
  return res;
}

AprioriResult apriori_ratio(const AdditiveModel& m, const GridFunction& u0,
                            const ScalingTriple& st, double T, const AprioriParams& params,
                            SymbolCache* cache) {
  AprioriResult res;
  const auto base = m.pieces().front().measure;
  std::function<double(const std::vector<double>&)> psi;
  if (params.classical) {
    psi = [](const std::vector<double>& xi) {
      double s = 0;
      for (double x : xi) s += x * x;
      return -s;
    };
  } else {
    psi = [base](const std::vector<double>& xi) { return base->symbol_symmetrized(xi); };
  }
  res.numerator = spacetime_norm(m, u0, T, psi, params.gamma, params.p, params.q,
                                 params.time_cells, cache)
                      .value;

  BesovResult den;
  if (params.classical) {
    const LPFamily fam = build_family(u0.grid, 2.0);
    den = besov_norm(u0, fam, ScalingFn::power(1.0),
                     2.0 * (params.gamma - params.alpha / params.q), params.p, params.q);
  } else {
    const LPFamily fam = build_family(u0.grid, st.c_s);
    den = besov_norm(u0, fam, st.s, params.gamma - 2.0 / params.q, params.p, params.q);
  }
  const double weight = params.classical ? (1.0 + T) : (1.0 + T * T);
  res.denominator = weight * den.value;

  const double scale_ref = 1.0 + lp_norm(
      u0.domain == Domain::space ? u0 : from_frequency(u0), 2.0);
  if (den.value <= 1e-14 * scale_ref) {
    res.degenerate = true;
    res.ratio = 0;
    return res;
  }
  res.ratio = res.numerator / res.denominator;
  return res;
}

} // namespace nle
