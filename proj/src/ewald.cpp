#include "latticesum/ewald.hpp"

#include "latticesum/compensated.hpp"
#include "latticesum/quadrature.hpp"
#include "latticesum/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace latticesum {

namespace {

using std::numbers::pi;
constexpr double kTwoPi = 2.0 * pi;

// Bessel factor below exp(-60) relative to a column's leading term.
constexpr double kColumnDecay = 60.0;
// Columns longer than this get a continuum tail instead.
constexpr long kColumnCap = 1L << 22;
// Below this the column argument is treated as exactly zero.
constexpr double kZeroArgument = 1e-12;
// Small-argument limits Lambda^2 K2 -> 2 and Lambda K1 -> 1 take over here.
constexpr double kSmallLambda = 1e-6;
// Largest number of oscillation periods integrated numerically in a tail.
constexpr double kMaxTailPeriods = 4096.0;

enum class Trig { cos, sin };

double trig(Trig t, double x) { return t == Trig::cos ? std::cos(x) : std::sin(x); }

// q^2 K_order(q l), with the Lambda -> 0 limits.
double column_weight(int order, double q, double l) {
  const double lambda = q * l;
  if (lambda < kSmallLambda) return order == 2 ? 2.0 / (l * l) : q / l;
  const BesselK01 k = bessel_k01(lambda);
  return order == 2 ? q * q * (k.k0 + 2.0 / lambda * k.k1) : q * q * k.k1;
}

// sum_{l >= 1} cos(l x) / l^2, the even Clausen-type polynomial.
double cos_over_l2(double x) {
  const double r = std::abs(std::remainder(x, kTwoPi));
  return pi * pi / 6.0 - 0.5 * pi * r + 0.25 * r * r;
}

// q int_{t0}^{inf} trig(w t) K_order(t) dt: the midpoint-rule continuum
// limit of the column beyond l = M when t0 = q (M + 1/2).
double column_tail(Trig t, double kx, double q, int order, double t0) {
  const double w = kx / q;
  const double t_end = kColumnDecay;
  if (t0 >= t_end) return 0.0;
  auto g = [order](double x) { return bessel_k(order, x); };
  const double periods = std::abs(w) * (t_end - t0) / kTwoPi;

  if (periods <= kMaxTailPeriods) {
    // Breakpoints: geometric near t0 where K varies on the scale t0, and at
    // least one per oscillation period.
    std::vector<double> breaks{t0};
    for (double b = 2.0 * t0; b < t_end; b *= 2.0) breaks.push_back(b);
    if (w != 0.0) {
      const double period = kTwoPi / std::abs(w);
      for (double b = t0 + period; b < t_end; b += period) breaks.push_back(b);
    }
    breaks.push_back(t_end);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto integrand = [&](double x) { return trig(t, w * x) * g(x); };
    const double tol = 1e-14 / (q * static_cast<double>(breaks.size()));
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
      acc += integrate(integrand, breaks[i], breaks[i + 1], tol, 30).value;
    return q * acc.value();
  }

  // Rapid oscillation: two orders of integration by parts at t0.
  const BesselK01 k = bessel_k01(t0);
  double g0 = 0.0;
  double g1 = 0.0;
  if (order == 1) {
    g0 = k.k1;
    g1 = -k.k0 - k.k1 / t0;
  } else {
    g0 = k.k0 + 2.0 / t0 * k.k1;
    g1 = -k.k1 - 2.0 / t0 * g0;
  }
  const double s = std::sin(w * t0);
  const double c = std::cos(w * t0);
  const double value = t == Trig::cos ? -s * g0 / w - c * g1 / (w * w)
                                      : c * g0 / w - s * g1 / (w * w);
  return q * value;
}

// sum_{l >= 1} trig(kx l) q^2 K_order(q l) for q >= 0.
double column_sum(Trig t, double kx, double q, int order, int l_min) {
  if (q < kZeroArgument) {
    // q^2 K2(q l) -> 2 / l^2 and q^2 K1(q l) -> 0.
    if (order == 1 || t == Trig::sin) return 0.0;
    return 2.0 * cos_over_l2(kx);
  }
  const double needed = std::ceil(kColumnDecay / q);
  const long l_end = std::min<long>(kColumnCap, std::max<long>(l_min, static_cast<long>(needed)));

  CompensatedSum<double> acc;
  for (long l = 1; l <= l_end; ++l) {
    const double ld = static_cast<double>(l);
    acc += trig(t, kx * ld) * column_weight(order, q, ld);
  }
  if (needed > static_cast<double>(l_end))
    acc += column_tail(t, kx, q, order, q * (static_cast<double>(l_end) + 0.5));
  return acc.value();
}

InterSeries inter_series(const WaveVector& k, double b_over_a, const EwaldConfig& cfg,
                         bool with_derivatives) {
  cfg.validate();
  if (!(b_over_a > 0.0)) throw std::domain_error("layer separation must be positive");
  const double beta = 2.0 * b_over_a;
  const double beta2 = beta * beta;
  const double beta3 = beta2 * beta;

  CompensatedSum<double> s, dx, dy, dxx, dyy, dxy;
  for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
    const double ux = pi * n + 0.5 * k.kxa;
    for (int m = -cfg.n_max; m <= cfg.n_max; ++m) {
      const double uy = pi * m + 0.5 * k.kya;
      const double gamma = std::hypot(ux, uy);
      const double e = std::exp(-beta * gamma);
      s += (1.0 + beta * gamma) * e;
      if (!with_derivatives) continue;
      if (gamma == 0.0)
        throw std::domain_error("inter-plane series derivatives are direction dependent at this k");
      // d/dk_j of (1 + beta G) exp(-beta G) is -beta^2 exp(-beta G) u_j / 2.
      dx += -0.5 * beta2 * e * ux;
      dy += -0.5 * beta2 * e * uy;
      const double c = 0.25 * beta3 * e / gamma;
      dxx += -0.25 * beta2 * e + c * ux * ux;
      dyy += -0.25 * beta2 * e + c * uy * uy;
      dxy += c * ux * uy;
    }
  }
  return {s.value(), dx.value(), dy.value(), dxx.value(), dyy.value(), dxy.value()};
}

CouplingTensor hermitian_from_upper(double xx, double yy, double zz, double xy,
                                    std::complex<double> xz, std::complex<double> yz) {
  CouplingTensor d;
  d << xx, xy, xz,
       xy, yy, yz,
       std::conj(xz), std::conj(yz), zz;
  return d;
}

}  // namespace

void EwaldConfig::validate() const {
  if (n_max < 1 || l_max < 1 || bessel_n_max < 1)
    throw std::domain_error("Ewald truncations must be >= 1");
}

double s_inter_series(const WaveVector& k, double b_over_a, const EwaldConfig& cfg) {
  return inter_series(k, b_over_a, cfg, false).s;
}

InterSeries s_inter_derivatives(const WaveVector& k, double b_over_a, const EwaldConfig& cfg) {
  return inter_series(k, b_over_a, cfg, true);
}

CouplingTensor d_inter_ewald(const WaveVector& k, double b_over_a, const EwaldConfig& cfg) {
  if (!(k.norm() > 0.0))
    throw std::domain_error("d_inter_ewald: k = 0 is non-analytic; use the direct sum");
  const InterSeries t = inter_series(k, b_over_a, cfg, true);
  const double b = b_over_a;
  const double pref = 2.0 * pi / (3.0 * b * b * b);
  const double xx = pref * (2.0 * t.dxx - t.dyy + b * b * t.s);
  const double yy = pref * (2.0 * t.dyy - t.dxx + b * b * t.s);
  const double zz = pref * (-t.dxx - t.dyy - 2.0 * b * b * t.s);
  const double xy = 3.0 * pref * t.dxy;
  const std::complex<double> xz{0.0, 3.0 * b * pref * t.dx};
  const std::complex<double> yz{0.0, 3.0 * b * pref * t.dy};
  return hermitian_from_upper(xx, yy, zz, xy, xz, yz);
}

CouplingTensor d_inter_longwave(const WaveVector& k, double b_over_a) {
  const double ka = k.norm();
  if (!(ka > 0.0)) throw std::domain_error("d_inter_longwave: k = 0 is non-analytic");
  if (!(b_over_a > 0.0)) throw std::domain_error("layer separation must be positive");
  const double f = 2.0 * pi * std::exp(-ka * b_over_a);
  return hermitian_from_upper(f * k.kxa * k.kxa / ka, f * k.kya * k.kya / ka, -f * ka,
                              f * k.kxa * k.kya / ka, {0.0, -f * k.kxa}, {0.0, -f * k.kya});
}

double s_intra_axis(const WaveVector& k, Axis axis, const EwaldConfig& cfg) {
  cfg.validate();
  if (axis == Axis::z) throw std::domain_error("s_intra_axis: axis must be x or y");
  // Columns run along the summed axis; the Poisson-resummed direction supplies q.
  const double along = axis == Axis::x ? k.kxa : k.kya;
  const double across = std::remainder(axis == Axis::x ? k.kya : k.kxa, kTwoPi);
  CompensatedSum<double> acc;
  for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
    const double q = std::abs(kTwoPi * n + across);
    acc += column_sum(Trig::cos, along, q, 2, cfg.l_max);
  }
  return 4.0 / 3.0 * acc.value();
}

double d_xy_intra(const WaveVector& k, const EwaldConfig& cfg) {
  cfg.validate();
  const double ky = std::remainder(k.kya, kTwoPi);
  CompensatedSum<double> acc;
  for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
    const double signed_q = kTwoPi * n + ky;
    if (signed_q == 0.0) continue;
    const double sign = signed_q > 0.0 ? 1.0 : -1.0;
    acc += sign * column_sum(Trig::sin, k.kxa, std::abs(signed_q), 1, cfg.l_max);
  }
  return 4.0 * acc.value();
}

CouplingTensor d_intra_ewald(const WaveVector& k, const EwaldConfig& cfg) {
  const double sx = s_intra_axis(k, Axis::x, cfg);
  const double sy = s_intra_axis(k, Axis::y, cfg);
  const double xy = d_xy_intra(k, cfg);
  return hermitian_from_upper(-2.0 * sx + sy, -2.0 * sy + sx, sx + sy, xy, 0.0, 0.0);
}

double f_constant(int terms) {
  if (terms < 0) throw std::domain_error("f_constant: negative term count");
  CompensatedSum<double> acc;
  for (int n = 1; n <= terms; ++n)
    for (int m = 1; m <= terms; ++m)
      acc += static_cast<double>(n) * n * bessel_k(2, kTwoPi * n * m);
  return 4.0 * pi * pi / 9.0 + 32.0 * pi * pi / 3.0 * acc.value();
}

double f_constant(const EwaldConfig& cfg) {
  cfg.validate();
  return f_constant(cfg.bessel_n_max);
}

}  // namespace latticesum
