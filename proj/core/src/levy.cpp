#include "nle/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nle/errors.hpp"
#include "nle/quadrature.hpp"

namespace nle {

namespace {

constexpr double pi = std::numbers::pi;

double one_minus_cos(double z) {
  const double az = std::abs(z);
  if (az < 1e-4) {
    const double z2 = z * z;
    return 0.5 * z2 * (1.0 - z2 / 12.0);
  }
  return 1.0 - std::cos(z);
}

// integral_a^b u^beta du with the standard limits; a < b assumed
double power_integral(double beta, double a, double b) {
  if (beta == -1.0) return std::log(b / a);
  const double e = beta + 1.0;
  const double hb = std::isinf(b) ? (e < 0 ? 0.0 : std::numeric_limits<double>::infinity())
                                  : std::pow(b, e);
  const double ha = (a == 0.0) ? (e > 0 ? 0.0 : std::numeric_limits<double>::infinity())
                               : std::pow(a, e);
  return (hb - ha) / e;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

} // namespace

double stable_norm_1d(double alpha) {
  if (!(alpha > 0 && alpha < 2)) fail(errc::config_invalid, "stable alpha must be in (0,2)");
  return pi / (std::tgamma(1.0 + alpha) * std::sin(pi * alpha / 2.0));
}

double stable_norm_iso(int d, double alpha) {
  if (!(alpha > 0 && alpha < 2)) fail(errc::config_invalid, "stable alpha must be in (0,2)");
  // |Gamma(-alpha/2)| = Gamma(1 - alpha/2) * (2/alpha) since Gamma(-x) x = -Gamma(1-x)
  const double abs_gamma_neg = std::tgamma(1.0 - alpha / 2.0) * (2.0 / alpha);
  return std::pow(pi, d / 2.0) * abs_gamma_neg /
         (std::pow(2.0, alpha) * std::tgamma((d + alpha) / 2.0));
}

double sphere_surface(int d) { return d == 1 ? 2.0 : 2.0 * pi; }

LevyMeasureModel::LevyMeasureModel(int d, LevyKind kind) : d_(d), kind_(std::move(kind)) {
  if (d_ != 1 && d_ != 2) fail(errc::config_invalid, "levy measure dimension must be 1 or 2");
  if (auto* a = std::get_if<AxisStable>(&kind_)) {
    if (!(a->alpha > 0 && a->alpha < 2)) fail(errc::config_invalid, "levy.alpha must be in (0,2)");
    if (static_cast<int>(a->weights.size()) != d_)
      fail(errc::config_invalid, "levy.weights must have one entry per axis");
    for (double w : a->weights)
      if (!(w >= 0)) fail(errc::config_invalid, "levy.weights must be nonnegative");
  } else if (auto* iso = std::get_if<IsotropicStable>(&kind_)) {
    if (!(iso->alpha > 0 && iso->alpha < 2))
      fail(errc::config_invalid, "levy.alpha must be in (0,2)");
    if (!(iso->weight >= 0)) fail(errc::config_invalid, "levy.weight must be nonnegative");
  } else if (auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    for (const auto& atom : at->atoms) {
      if (static_cast<int>(atom.y.size()) != d_)
        fail(errc::config_invalid, "atom location dimension mismatch");
      if (!(atom.w >= 0)) fail(errc::config_invalid, "atom weights must be nonnegative");
      if (norm2(atom.y) == 0.0) fail(errc::config_invalid, "atoms must avoid the origin");
    }
  } else if (auto* q = std::get_if<QuadratureBacked>(&kind_)) {
    if (!q->profile) fail(errc::config_invalid, "quadrature kind needs a profile");
    if (q->shape == QuadratureBacked::Shape::per_axis) {
      if (q->axis_weights.empty()) {
        // default unit weight per axis
      } else if (static_cast<int>(q->axis_weights.size()) != d_) {
        fail(errc::config_invalid, "axis_weights must have one entry per axis");
      }
    }
    if (!(q->support_lo >= 0) || !(q->support_hi > q->support_lo))
      fail(errc::config_invalid, "quadrature kind support window invalid");
  }
}

namespace {

// ---- quadrature-backed helpers ----------------------------------------

std::vector<double> qb_axis_weights(const QuadratureBacked& q, int d) {
  if (!q.axis_weights.empty()) return q.axis_weights;
  return std::vector<double>(d, 1.0);
}

// integral of profile * g over the magnitude window intersected with [a, b]
double qb_window_integral(const QuadratureBacked& q, double a, double b,
                          const std::function<double(double)>& g, double rel_tol) {
  const double lo = std::max(a, q.support_lo);
  const double hi = std::min(b, q.support_hi);
  if (!(hi > lo)) return 0.0;
  auto f = [&](double r) { return q.profile(r) * g(r); };
  if (std::isinf(hi)) {
    // split at max(1, lo): adaptive rule behaves better with a finite head
    const double mid = std::max(1.0, lo * 2);
    return integrate_gk(f, lo, mid, rel_tol).value + integrate_gk(f, mid, hi, rel_tol).value;
  }
  return integrate_gk(f, lo, hi, rel_tol).value;
}

// one-dimensional symmetrized symbol section of a magnitude profile:
// per unit axis weight for per_axis (both signs), of the magnitude law for
// radial. The d = 2 angular average of cos(y.xi) over uniform directions is
// the Bessel factor J_0(r|xi|), evaluated exactly via std::cyl_bessel_j.
double qb_section_quad(const QuadratureBacked& q, int d, double v, double rel_tol) {
  if (v == 0.0) return 0.0;
  const bool per_axis = q.shape == QuadratureBacked::Shape::per_axis;
  auto integrand = [&](double r) {
    if (per_axis || d == 1) return one_minus_cos(r * v);
    return 1.0 - std::cyl_bessel_j(0.0, r * v);
  };
  const double factor = per_axis ? 2.0 : 1.0;
  return -factor * qb_window_integral(q, 0.0, std::numeric_limits<double>::infinity(),
                                      integrand, rel_tol);
}

double qb_section(const QuadratureBacked& q, int d, double v, double rel_tol) {
  if (q.closed_symbol_section) return (*q.closed_symbol_section)(std::abs(v));
  return qb_section_quad(q, d, std::abs(v), rel_tol);
}

} // namespace

std::complex<double> LevyMeasureModel::symbol(const std::vector<double>& xi,
                                              double rel_tol) const {
  if (static_cast<int>(xi.size()) != d_) fail(errc::config_invalid, "xi dimension mismatch");
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    std::complex<double> acc = 0;
    for (const auto& atom : at->atoms) {
      double dot = 0;
      for (int j = 0; j < d_; ++j) dot += atom.y[j] * xi[j];
      std::complex<double> term = std::polar(1.0, dot) - 1.0;
      if (norm2(atom.y) <= 1.0) term -= std::complex<double>(0.0, dot);
      acc += atom.w * term;
    }
    return acc;
  }
  return {symbol_symmetrized(xi, rel_tol), 0.0};
}

double LevyMeasureModel::symbol_symmetrized(const std::vector<double>& xi,
                                            double rel_tol) const {
  if (static_cast<int>(xi.size()) != d_) fail(errc::config_invalid, "xi dimension mismatch");
  if (const auto* a = std::get_if<AxisStable>(&kind_)) {
    const double kappa = a->normalized ? 1.0 / stable_norm_1d(a->alpha) : 1.0;
    double acc = 0;
    for (int j = 0; j < d_; ++j)
      acc -= a->weights[j] * kappa * stable_norm_1d(a->alpha) * std::pow(std::abs(xi[j]), a->alpha);
    return acc;
  }
  if (const auto* iso = std::get_if<IsotropicStable>(&kind_)) {
    const double kappa = iso->normalized ? 1.0 / stable_norm_iso(d_, iso->alpha) : 1.0;
    return -iso->weight * kappa * stable_norm_iso(d_, iso->alpha) *
           std::pow(norm2(xi), iso->alpha);
  }
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    double acc = 0;
    for (const auto& atom : at->atoms) {
      double dot = 0;
      for (int j = 0; j < d_; ++j) dot += atom.y[j] * xi[j];
      acc -= atom.w * one_minus_cos(dot);
    }
    return acc;
  }
  const auto& q = std::get<QuadratureBacked>(kind_);
  if (q.shape == QuadratureBacked::Shape::per_axis) {
    const auto w = qb_axis_weights(q, d_);
    double acc = 0;
    for (int j = 0; j < d_; ++j)
      if (xi[j] != 0.0 && w[j] != 0.0) acc += w[j] * qb_section(q, d_, xi[j], rel_tol);
    return acc;
  }
  const double r = norm2(xi);
  return r == 0.0 ? 0.0 : qb_section(q, d_, r, rel_tol);
}

LevyMeasureModel LevyMeasureModel::scaled(double c) const {
  if (!(c > 0)) fail(errc::config_invalid, "scale factor must be positive");
  if (const auto* a = std::get_if<AxisStable>(&kind_)) {
    AxisStable out = *a;
    const double f = std::pow(c, -a->alpha);
    for (double& w : out.weights) w *= f;
    return LevyMeasureModel(d_, out);
  }
  if (const auto* iso = std::get_if<IsotropicStable>(&kind_)) {
    IsotropicStable out = *iso;
    out.weight *= std::pow(c, -iso->alpha);
    return LevyMeasureModel(d_, out);
  }
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    FiniteAtomic out;
    for (const auto& atom : at->atoms) {
      FiniteAtomic::Atom moved = atom;
      for (double& y : moved.y) y /= c;
      out.atoms.push_back(std::move(moved));
    }
    return LevyMeasureModel(d_, out);
  }
  const auto& q = std::get<QuadratureBacked>(kind_);
  QuadratureBacked out = q;
  auto base_profile = q.profile;
  out.profile = [base_profile, c](double r) { return c * base_profile(c * r); };
  out.support_lo = q.support_lo / c;
  out.support_hi = q.support_hi / c;
  if (q.closed_symbol_section) {
    auto base_section = *q.closed_symbol_section;
    out.closed_symbol_section = [base_section, c](double v) { return base_section(v / c); };
  }
  if (q.tail) {
    auto base_tail = *q.tail;
    out.tail = TailLaw{
        [base_tail, c](double eps) { return base_tail.tail_mass(c * eps); },
        [base_tail, c](double u, double eps) { return base_tail.quantile(u, c * eps) / c; }};
  }
  return LevyMeasureModel(d_, out);
}

double LevyMeasureModel::band_mass(double a, double b) const {
  if (!(b > a)) return 0.0;
  if (const auto* ax = std::get_if<AxisStable>(&kind_)) {
    const double kappa = ax->normalized ? 1.0 / stable_norm_1d(ax->alpha) : 1.0;
    double wsum = 0;
    for (double w : ax->weights) wsum += w;
    return wsum * kappa * 2.0 * power_integral(-1.0 - ax->alpha, std::max(a, 0.0), b);
  }
  if (const auto* iso = std::get_if<IsotropicStable>(&kind_)) {
    const double kappa = iso->normalized ? 1.0 / stable_norm_iso(d_, iso->alpha) : 1.0;
    return iso->weight * kappa * sphere_surface(d_) *
           power_integral(-1.0 - iso->alpha, std::max(a, 0.0), b);
  }
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    double acc = 0;
    for (const auto& atom : at->atoms) {
      const double r = norm2(atom.y);
      if (r > a && r <= b) acc += atom.w;
    }
    return acc;
  }
  const auto& q = std::get<QuadratureBacked>(kind_);
  auto one = [](double) { return 1.0; };
  if (q.shape == QuadratureBacked::Shape::per_axis) {
    const auto w = qb_axis_weights(q, d_);
    double wsum = 0;
    for (double x : w) wsum += x;
    return wsum * 2.0 * qb_window_integral(q, a, b, one, 1e-10);
  }
  return qb_window_integral(q, a, b, one, 1e-10);
}

double LevyMeasureModel::band_dir_m2(double a, double b, const std::vector<double>& dir) const {
  if (!(b > a)) return 0.0;
  if (static_cast<int>(dir.size()) != d_) fail(errc::config_invalid, "dir dimension mismatch");
  if (const auto* ax = std::get_if<AxisStable>(&kind_)) {
    const double kappa = ax->normalized ? 1.0 / stable_norm_1d(ax->alpha) : 1.0;
    double acc = 0;
    for (int j = 0; j < d_; ++j)
      acc += dir[j] * dir[j] * ax->weights[j] * kappa * 2.0 *
             power_integral(1.0 - ax->alpha, std::max(a, 0.0), b);
    return acc;
  }
  if (const auto* iso = std::get_if<IsotropicStable>(&kind_)) {
    const double kappa = iso->normalized ? 1.0 / stable_norm_iso(d_, iso->alpha) : 1.0;
    const double n2 = norm2(dir);
    return iso->weight * kappa * sphere_surface(d_) * (n2 * n2 / d_) *
           power_integral(1.0 - iso->alpha, std::max(a, 0.0), b);
  }
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    double acc = 0;
    for (const auto& atom : at->atoms) {
      const double r = norm2(atom.y);
      if (r > a && r <= b) {
        double dot = 0;
        for (int j = 0; j < d_; ++j) dot += atom.y[j] * dir[j];
        acc += atom.w * dot * dot;
      }
    }
    return acc;
  }
  const auto& q = std::get<QuadratureBacked>(kind_);
  auto r2 = [](double r) { return r * r; };
  if (q.shape == QuadratureBacked::Shape::per_axis) {
    const auto w = qb_axis_weights(q, d_);
    double acc = 0;
    for (int j = 0; j < d_; ++j)
      if (dir[j] != 0.0 && w[j] != 0.0)
        acc += dir[j] * dir[j] * w[j] * 2.0 * qb_window_integral(q, a, b, r2, 1e-10);
    return acc;
  }
  const double n2 = norm2(dir);
  return (n2 * n2 / d_) * qb_window_integral(q, a, b, r2, 1e-10);
}

double LevyMeasureModel::band_abs2(double a, double b) const {
  if (!(b > a)) return 0.0;
  if (d_ == 1) return band_dir_m2(a, b, {1.0});
  // |y|^2 = |y.e1|^2 + |y.e2|^2
  return band_dir_m2(a, b, {1.0, 0.0}) + band_dir_m2(a, b, {0.0, 1.0});
}

std::vector<double> LevyMeasureModel::band_first_moment(double a, double b) const {
  std::vector<double> out(d_, 0.0);
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    for (const auto& atom : at->atoms) {
      const double r = norm2(atom.y);
      if (r > a && r <= b)
        for (int j = 0; j < d_; ++j) out[j] += atom.w * atom.y[j];
    }
  }
  // all other built-in kinds are symmetric
  return out;
}

double LevyMeasureModel::concentration(double r) const {
  if (!(r > 0)) fail(errc::config_invalid, "concentration requires r > 0");
  return band_abs2(0.0, r) / (r * r) +
         band_mass(r, std::numeric_limits<double>::infinity());
}

bool LevyMeasureModel::is_symmetric() const {
  if (const auto* at = std::get_if<FiniteAtomic>(&kind_)) {
    // symmetric iff atoms pair up under y -> -y with equal weights
    for (const auto& atom : at->atoms) {
      double matched = 0;
      for (const auto& other : at->atoms) {
        bool neg = true;
        for (int j = 0; j < d_; ++j)
          if (std::abs(other.y[j] + atom.y[j]) > 1e-15 * (1 + std::abs(atom.y[j]))) neg = false;
        if (neg) matched += other.w;
      }
      if (std::abs(matched - atom.w) > 1e-12 * (1 + atom.w)) return false;
    }
    return true;
  }
  return true;
}

bool LevyMeasureModel::infinite_activity() const {
  if (std::holds_alternative<AxisStable>(kind_) || std::holds_alternative<IsotropicStable>(kind_))
    return true;
  if (const auto* q = std::get_if<QuadratureBacked>(&kind_)) {
    (void)q;
    return !std::isfinite(band_mass(0.0, 1.0));
  }
  return false;
}

LevyPtr make_axis_stable(int d, double alpha, std::vector<double> weights, bool normalized) {
  return std::make_shared<LevyMeasureModel>(d, AxisStable{alpha, std::move(weights), normalized});
}

LevyPtr make_isotropic_stable(int d, double alpha, double weight, bool normalized) {
  return std::make_shared<LevyMeasureModel>(d, IsotropicStable{alpha, weight, normalized});
}

LevyPtr make_finite_atomic(int d, std::vector<FiniteAtomic::Atom> atoms) {
  return std::make_shared<LevyMeasureModel>(d, FiniteAtomic{std::move(atoms)});
}

LevyPtr make_table_radial(int d, const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2) fail(errc::config_invalid, "radial table needs >= 2 samples");
  ScalingFn interp = ScalingFn::table(samples);
  QuadratureBacked q;
  q.shape = QuadratureBacked::Shape::radial;
  q.support_lo = samples.front().first;
  q.support_hi = samples.back().first;
  q.profile = [interp](double r) { return interp(r); };
  return std::make_shared<LevyMeasureModel>(d, q);
}

namespace {

// 1-d complement integral: integral_0^eps (1 - cos(r v)) r^{-1-alpha} dr
double stable_complement_1d(double alpha, double eps, double v) {
  if (v == 0.0 || eps == 0.0) return 0.0;
  return integrate_gk([&](double r) { return one_minus_cos(r * v) * std::pow(r, -1.0 - alpha); },
                      0.0, eps, 1e-11)
      .value;
}

double stable_complement_iso2(double alpha, double eps, double v) {
  if (v == 0.0 || eps == 0.0) return 0.0;
  return integrate_gk(
             [&](double r) {
               return (1.0 - std::cyl_bessel_j(0.0, r * v)) * std::pow(r, -1.0 - alpha);
             },
             0.0, eps, 1e-11)
      .value;
}

TailLaw pareto_tail(double alpha, double unit_mass_factor) {
  return TailLaw{
      [alpha, unit_mass_factor](double eps) {
        return unit_mass_factor * std::pow(eps, -alpha) / alpha;
      },
      [alpha](double u, double eps) { return eps * std::pow(u, -1.0 / alpha); }};
}

} // namespace

LevyPtr truncate_small_jumps(const LevyMeasureModel& m, double eps) {
  if (!(eps > 0)) fail(errc::config_invalid, "truncation cutoff must be positive");
  const int d = m.dim();
  if (const auto* ax = std::get_if<AxisStable>(&m.kind())) {
    const double alpha = ax->alpha;
    const double kappa = ax->normalized ? 1.0 / stable_norm_1d(alpha) : 1.0;
    QuadratureBacked q;
    q.shape = QuadratureBacked::Shape::per_axis;
    q.axis_weights = ax->weights;
    q.support_lo = eps;
    q.profile = [kappa, alpha](double r) { return kappa * std::pow(r, -1.0 - alpha); };
    const double calpha = stable_norm_1d(alpha);
    q.closed_symbol_section = [kappa, alpha, calpha, eps](double v) {
      return -kappa * (calpha * std::pow(v, alpha) - 2.0 * stable_complement_1d(alpha, eps, v));
    };
    q.tail = pareto_tail(alpha, 2.0 * kappa);
    return std::make_shared<LevyMeasureModel>(d, q);
  }
  if (const auto* iso = std::get_if<IsotropicStable>(&m.kind())) {
    const double alpha = iso->alpha;
    const double kappa = iso->normalized ? 1.0 / stable_norm_iso(d, alpha) : 1.0;
    const double surf = sphere_surface(d);
    const double w = iso->weight;
    QuadratureBacked q;
    q.shape = QuadratureBacked::Shape::radial;
    q.support_lo = eps;
    q.profile = [w, kappa, surf, alpha](double r) {
      return w * kappa * surf * std::pow(r, -1.0 - alpha);
    };
    const double cfull = stable_norm_iso(d, alpha);
    q.closed_symbol_section = [d, w, kappa, surf, alpha, cfull, eps](double v) {
      const double comp = (d == 1) ? 2.0 * stable_complement_1d(alpha, eps, v)
                                   : surf * stable_complement_iso2(alpha, eps, v);
      return -w * kappa * (cfull * std::pow(v, alpha) - comp);
    };
    q.tail = pareto_tail(alpha, w * kappa * surf);
    return std::make_shared<LevyMeasureModel>(d, q);
  }
  if (const auto* at = std::get_if<FiniteAtomic>(&m.kind())) {
    FiniteAtomic out;
    for (const auto& atom : at->atoms) {
      double r2 = 0;
      for (double y : atom.y) r2 += y * y;
      if (std::sqrt(r2) > eps) out.atoms.push_back(atom);
    }
    return std::make_shared<LevyMeasureModel>(d, out);
  }
  const auto& q0 = std::get<QuadratureBacked>(m.kind());
  QuadratureBacked q = q0;
  const double old_lo = q.support_lo;
  q.support_lo = std::max(q.support_lo, eps);
  if (q0.closed_symbol_section && eps > old_lo) {
    auto base = *q0.closed_symbol_section;
    auto profile = q0.profile;
    const bool per_axis = q0.shape == QuadratureBacked::Shape::per_axis;
    const double factor = per_axis ? 2.0 : 1.0;
    q.closed_symbol_section = [base, profile, old_lo, eps, factor, d, per_axis](double v) {
      auto integrand = [&](double r) {
        if (per_axis || d == 1) return one_minus_cos(r * v) * profile(r);
        return (1.0 - std::cyl_bessel_j(0.0, r * v)) * profile(r);
      };
      return base(v) + factor * integrate_gk(integrand, old_lo, eps, 1e-11).value;
    };
  }
  return std::make_shared<LevyMeasureModel>(d, q);
}

WeakScalingReport weak_scaling_sup(const LevyMeasureModel& m, const ScalingFn& s,
                                   const std::vector<double>& r_grid) {
  if (r_grid.size() < 8) fail(errc::config_invalid, "weak_scaling_sup grid too small");
  std::vector<double> grid = r_grid;
  std::sort(grid.begin(), grid.end());
  WeakScalingReport rep;
  for (double r : grid) {
    const double v = s(r) * m.concentration(r);
    rep.samples.push_back({r, v});
    if (v > rep.sup) {
      rep.sup = v;
      rep.argmax_r = r;
    }
  }
  auto growing = [&](std::size_t i, std::size_t j) {
    return rep.samples[i].second > rep.samples[j].second * (1.0 + 1e-9);
  };
  // monotone growth over the outermost three samples at either end
  const std::size_t last = rep.samples.size() - 1;
  if ((growing(0, 1) && growing(1, 2)) || (growing(last, last - 1) && growing(last - 1, last - 2)))
    rep.unbounded = true;
  return rep;
}

double assumption_n1(const LevyMeasureModel& nu) {
  const double inf = std::numeric_limits<double>::infinity();
  if (const auto* ax = std::get_if<AxisStable>(&nu.kind())) {
    (void)ax;
    fail(errc::config_invalid, "nu must have a finite second moment; truncate the axis-stable kind");
  }
  if (std::holds_alternative<IsotropicStable>(nu.kind()))
    fail(errc::config_invalid, "nu must have a finite second moment; truncate the isotropic kind");
  const int d = nu.dim();
  if (d == 1) return nu.band_dir_m2(0.0, inf, {1.0});
  if (std::holds_alternative<FiniteAtomic>(nu.kind())) {
    // eigenvalues of the 2x2 second-moment matrix
    const double qxx = nu.band_dir_m2(0.0, inf, {1.0, 0.0});
    const double qyy = nu.band_dir_m2(0.0, inf, {0.0, 1.0});
    const double qd1 = nu.band_dir_m2(0.0, inf, {std::sqrt(0.5), std::sqrt(0.5)});
    const double qxy = qd1 - 0.5 * (qxx + qyy); // off-diagonal entry
    const double tr = qxx + qyy, det = qxx * qyy - qxy * qxy;
    return 0.5 * (tr - std::sqrt(std::max(tr * tr - 4 * det, 0.0)));
  }
  const auto& q = std::get<QuadratureBacked>(nu.kind());
  if (q.shape == QuadratureBacked::Shape::radial) return nu.band_dir_m2(0.0, inf, {1.0, 0.0});
  double mn = inf;
  for (int j = 0; j < d; ++j) {
    std::vector<double> e(d, 0.0);
    e[j] = 1.0;
    mn = std::min(mn, nu.band_dir_m2(0.0, inf, e));
  }
  return mn;
}

std::vector<Probe> default_probes(int d, double c_s) {
  const double cap = 1.0 / (c_s * c_s);
  std::vector<Probe> probes;
  double b = cap;
  for (int k = 0; k < 8; ++k) {
    probes.push_back({Probe::Kind::shell, b / 2.0, b, {}});
    b /= 2.0;
  }
  probes.push_back({Probe::Kind::shell, 0.0, b, {}});
  std::vector<std::vector<double>> dirs;
  if (d == 1) {
    dirs = {{1.0}};
  } else {
    const double r = std::sqrt(0.5);
    dirs = {{1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, -r}};
  }
  for (auto& dir : dirs) probes.push_back({Probe::Kind::quadratic, 0.0, cap, std::move(dir)});
  return probes;
}

namespace {

double probe_value(const LevyMeasureModel& m, const Probe& p, double r) {
  // integral f(y/r) dLambda: substitute the scaled window
  if (p.kind == Probe::Kind::shell) return m.band_mass(r * p.a, r * p.b);
  return m.band_dir_m2(0.0, r * p.b, p.dir) / (r * r);
}

double probe_value_direct(const LevyMeasureModel& m, const Probe& p) {
  if (p.kind == Probe::Kind::shell) return m.band_mass(p.a, p.b);
  return m.band_dir_m2(0.0, p.b, p.dir);
}

} // namespace

LowerBoundReport lower_bound_check(const TimeScaledFamily& fam, const ScalingTriple& st,
                                   const LevyMeasureModel& nu, const std::vector<double>& r_grid,
                                   const std::vector<double>& t_grid,
                                   const std::vector<Probe>& probes) {
  if (!fam.base || !fam.scale) fail(errc::config_invalid, "family needs a base measure and scale");
  if (fam.base->dim() != nu.dim()) fail(errc::config_invalid, "nu dimension mismatch");
  const double cap = 1.0 / (st.c_s * st.c_s);
  const double inf = std::numeric_limits<double>::infinity();
  if (!(nu.band_mass(0.0, inf) > 0)) fail(errc::config_invalid, "nu must be a nonzero measure");
  if (nu.band_mass(cap * (1 + 1e-12), inf) > 0)
    fail(errc::config_invalid, "nu must be supported in |y| <= 1/c_s^2");

  LowerBoundReport rep;
  rep.min_margin = inf;
  rep.n1 = assumption_n1(nu);
  for (double t : t_grid) {
    const double ct = fam.scale(t);
    for (double r : r_grid) {
      const double sr = st.s(r);
      for (std::size_t pi_ = 0; pi_ < probes.size(); ++pi_) {
        const auto& p = probes[pi_];
        const double lhs = sr * ct * probe_value(*fam.base, p, r);
        const double rhs = probe_value_direct(nu, p);
        const double margin = (lhs - rhs) / std::max(rhs, 1e-300);
        if (margin < rep.min_margin) {
          rep.min_margin = margin;
          rep.worst_r = r;
          rep.worst_t = t;
          rep.worst_probe = pi_;
        }
      }
    }
  }
  if (rep.min_margin < -1e-9)
    fail(errc::lower_bound_fail,
         "domination fails at r=" + std::to_string(rep.worst_r) + " t=" +
             std::to_string(rep.worst_t) + " probe#" + std::to_string(rep.worst_probe) +
             " margin=" + std::to_string(rep.min_margin));
  return rep;
}

SymbolLowerBoundReport symbol_lower_bound(const TimeScaledFamily& fam, const ScalingTriple& st,
                                          double n1, const std::vector<double>& xi_grid,
                                          const std::vector<double>& t_grid) {
  if (!fam.base || !fam.scale) fail(errc::config_invalid, "family needs a base measure and scale");
  const int d = fam.base->dim();
  std::vector<std::vector<double>> dirs;
  if (d == 1) {
    dirs = {{1.0}, {-1.0}};
  } else {
    const double r = std::sqrt(0.5);
    dirs = {{1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, -r}};
  }
  SymbolLowerBoundReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double ct = fam.scale(t);
    for (double mag : xi_grid) {
      if (!(mag > 0)) continue;
      const double rhs = 0.25 * n1 / st.s(1.0 / mag);
      for (const auto& dir : dirs) {
        std::vector<double> xi(d);
        for (int j = 0; j < d; ++j) xi[j] = mag * dir[j];
        const double lhs = -ct * fam.base->symbol_symmetrized(xi);
        const double margin = lhs - rhs;
        if (margin < rep.min_margin) {
          rep.min_margin = margin;
          rep.worst_xi = mag;
          rep.worst_t = t;
        }
      }
    }
  }
  if (rep.min_margin < -1e-9)
    fail(errc::lower_bound_fail, "symbol lower bound fails at |xi|=" + std::to_string(rep.worst_xi) +
                                     " t=" + std::to_string(rep.worst_t));
  return rep;
}

} // namespace nle
