#include "latticesum/specfun.hpp"

#include "latticesum/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latticesum {

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 10000;

void check_args(int order, double x) {
  if (order < 0 || order > 2)
    throw std::domain_error("bessel_k: unsupported order " + std::to_string(order));
  if (!(x > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
}

// Ascending series, A&S 9.6.13 and 9.6.11 with n = 1.
BesselK01 series(double x) {
  const double y = 0.25 * x * x;
  const double log_half = std::log(0.5 * x);

  // I0, I1 and the psi-weighted companions in one pass.
  double term0 = 1.0;        // y^k / (k!)^2
  double term1 = 1.0;        // y^k / (k! (k+1)!)
  double harmonic = 0.0;     // H_k
  double i0 = 1.0;
  double i1 = 1.0;
  double k0_tail = 0.0;      // sum_{k>=1} H_k y^k/(k!)^2
  double k1_tail = -2.0 * std::numbers::egamma + 1.0;  // k = 0: psi(1)+psi(2)
  for (int k = 1; k < kMaxIterations; ++k) {
    term0 *= y / (static_cast<double>(k) * k);
    term1 *= y / (static_cast<double>(k) * (k + 1));
    harmonic += 1.0 / k;
    const double psi_sum = -2.0 * std::numbers::egamma + 2.0 * harmonic + 1.0 / (k + 1);
    i0 += term0;
    i1 += term1;
    k0_tail += harmonic * term0;
    k1_tail += psi_sum * term1;
    if (term0 * harmonic < kEps * std::abs(k0_tail) && term1 * (harmonic + 1.0) < kEps * i1)
      break;
  }
  i1 *= 0.5 * x;

  BesselK01 out{};
  out.k0 = -(log_half + std::numbers::egamma) * i0 + k0_tail;
  out.k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_tail;
  return out;
}

// Steed's algorithm for Temme's continued fraction CF2 at order 0.
BesselK01 continued_fraction(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < kMaxIterations; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h *= a1;
  BesselK01 out{};
  out.k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  out.k1 = out.k0 * (x + 0.5 - h) / x;
  return out;
}

}  // namespace

BesselK01 bessel_k01(double x) {
  check_args(0, x);
  if (std::isinf(x)) return {0.0, 0.0};
  return x <= kSeriesLimit ? series(x) : continued_fraction(x);
}

double bessel_k(int order, double x) {
  check_args(order, x);
  const BesselK01 k = bessel_k01(x);
  switch (order) {
    case 0: return k.k0;
    case 1: return k.k1;
    default: return k.k0 + 2.0 / x * k.k1;
  }
}

double bessel_k_oracle(int order, double x) {
  check_args(order, x);
  // The integrand is below exp(-745) once x cosh t - n t exceeds ~745.
  double upper = 1.0;
  while (x * std::cosh(upper) - order * upper < 760.0) upper *= 1.25;
  auto integrand = [x, order](double t) {
    return std::exp(-x * std::cosh(t)) * std::cosh(order * t);
  };
  // Split at the decay scale so the relative tolerance is measured against
  // the bulk of the integral rather than the tail.
  const double knee = std::min(upper, std::acosh(1.0 + 1.0 / x));
  const QuadratureResult head = integrate_relative(integrand, 0.0, knee, 1e-13);
  const double tol = 1e-13 * std::abs(head.value);
  const QuadratureResult tail = integrate(integrand, knee, upper, tol);
  return head.value + tail.value;
}

}  // namespace latticesum
