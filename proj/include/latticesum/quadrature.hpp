#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace latticesum {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
QuadratureResult gauss_kronrod_15(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename F>
QuadratureResult adaptive_gk(F& f, double lo, double hi, double abs_tol, int depth) {
  const QuadratureResult whole = gauss_kronrod_15(f, lo, hi);
  if (whole.error <= abs_tol || depth == 0) return whole;
  const double mid = 0.5 * (lo + hi);
  const QuadratureResult left = adaptive_gk(f, lo, mid, 0.5 * abs_tol, depth - 1);
  const QuadratureResult right = adaptive_gk(f, mid, hi, 0.5 * abs_tol, depth - 1);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi] with
/// recursive bisection. The tolerance is absolute; callers wanting a relative
/// target pass rel_tol * |estimate|.
template <typename F>
QuadratureResult integrate(F&& f, double lo, double hi, double abs_tol, int max_depth = 40) {
  if (!(hi >= lo)) throw std::domain_error("integrate: empty interval");
  if (hi == lo) return {};
  return detail::adaptive_gk(f, lo, hi, abs_tol, max_depth);
}

/// Relative-accuracy wrapper: a coarse pass sets the absolute target.
template <typename F>
QuadratureResult integrate_relative(F&& f, double lo, double hi, double rel_tol,
                                    int max_depth = 40) {
  const QuadratureResult coarse = detail::gauss_kronrod_15(f, lo, hi);
  const double scale = std::abs(coarse.value);
  const double tol = scale > 0.0 ? rel_tol * scale : rel_tol;
  return integrate(f, lo, hi, tol, max_depth);
}

}  // namespace latticesum
