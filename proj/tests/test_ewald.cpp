#include <doctest.h>

#include "latticesum/direct_sum.hpp"
#include "latticesum/ewald.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace latticesum;
using std::numbers::pi;

namespace {
constexpr double kF = 4.51681084155047515286525763966;  // half the square-lattice 1/r^3 sum
constexpr double kLongWaveAmplitude = 0.00622066656878836499931283384249;  // 2 pi 1e-3 e^{-0.01}

double max_abs_diff(const CouplingTensor& a, const CouplingTensor& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("s_inter_series values") {
  // Term-by-term at 30 digits, |n|,|m| <= 6.
  CHECK(rel(s_inter_series({0, 0}, 1.0), 1.06016116413614922035) < 1e-13);
  CHECK(rel(s_inter_series({0, 0}, 1.0, {2, 30, 8}), 1.0601) < 1e-4);
  CHECK(std::abs(s_inter_series({0, 0}, 10.0) - 1.0) <= 1e-12);
  CHECK(std::abs(s_inter_series({1e-3, 0}, 10.0) - 0.999950332086659734109645) <= 1e-12);
  CHECK(s_inter_series({0.3, 0.8}, 2.0) == s_inter_series({0.8, 0.3}, 2.0));
}

TEST_CASE("analytic derivatives match finite differences") {
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> dist(-pi, pi);
  for (int trial = 0; trial < 10; ++trial) {
    const WaveVector k{dist(rng), dist(rng)};
    const InterSeries s = s_inter_derivatives(k, 1.0);
    auto f = [](double x, double y) { return s_inter_series({x, y}, 1.0); };

    const double h1 = 1e-5;
    const double fd_x = (f(k.kxa + h1, k.kya) - f(k.kxa - h1, k.kya)) / (2 * h1);
    const double fd_y = (f(k.kxa, k.kya + h1) - f(k.kxa, k.kya - h1)) / (2 * h1);
    CHECK(std::abs(fd_x - s.dx) <= 1e-7 * std::max(std::abs(s.dx), 1e-2));
    CHECK(std::abs(fd_y - s.dy) <= 1e-7 * std::max(std::abs(s.dy), 1e-2));

    // Fourth-order stencils for the second derivatives.
    const double h = 1e-3;
    const double fxx = (-f(k.kxa + 2 * h, k.kya) + 16 * f(k.kxa + h, k.kya) - 30 * f(k.kxa, k.kya) +
                        16 * f(k.kxa - h, k.kya) - f(k.kxa - 2 * h, k.kya)) / (12 * h * h);
    const double fyy = (-f(k.kxa, k.kya + 2 * h) + 16 * f(k.kxa, k.kya + h) - 30 * f(k.kxa, k.kya) +
                        16 * f(k.kxa, k.kya - h) - f(k.kxa, k.kya - 2 * h)) / (12 * h * h);
    auto mixed = [&](double s) {
      return (f(k.kxa + s, k.kya + s) - f(k.kxa + s, k.kya - s) - f(k.kxa - s, k.kya + s) +
              f(k.kxa - s, k.kya - s)) / (4 * s * s);
    };
    const double fxy = (4 * mixed(h) - mixed(2 * h)) / 3;  // Richardson step to fourth order
    CHECK(std::abs(fxx - s.dxx) <= 1e-7 * std::max(std::abs(s.dxx), 1e-2));
    CHECK(std::abs(fyy - s.dyy) <= 1e-7 * std::max(std::abs(s.dyy), 1e-2));
    CHECK(std::abs(fxy - s.dxy) <= 1e-7 * std::max(std::abs(s.dxy), 1e-2));
  }
}

TEST_CASE("d_inter_ewald long-wavelength point") {
  const CouplingTensor d = d_inter_ewald({1e-3, 0.0}, 10.0);
  CHECK(rel(d(2, 2).real(), -kLongWaveAmplitude) < 1e-12);
  CHECK(rel(d(0, 0).real(), kLongWaveAmplitude) < 1e-12);
  CHECK(rel(d(0, 2).imag(), -kLongWaveAmplitude) < 1e-12);
  CHECK(std::abs(d(0, 2).real()) == 0.0);
  CHECK(std::abs(d(1, 2)) < 1e-15);
  CHECK(trace_residual(d) <= 1e-10);
  CHECK(hermitian_residual(d) == 0.0);
}

TEST_CASE("d_inter_longwave closed form") {
  const CouplingTensor lw = d_inter_longwave({1e-3, 0.0}, 10.0);
  CHECK(rel(lw(0, 0).real(), kLongWaveAmplitude) < 1e-14);

  for (double phi : {0.0, 0.4, 1.9, 3.5, 5.0}) {
    for (double ka : {1e-4, 1e-3, 1e-2}) {
      const WaveVector k = from_polar(ka, phi);
      const CouplingTensor l = d_inter_longwave(k, 10.0);
      const CouplingTensor e = d_inter_ewald(k, 10.0);
      CHECK(trace_residual(l) <= 1e-15);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(std::abs(l(i, j) - e(i, j)) <= 1e-10 * std::max(std::abs(e(i, j)), 1e-3 * ka));
    }
  }
  CHECK_THROWS_AS(d_inter_longwave({0.0, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(d_inter_ewald({0.0, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(d_inter_ewald({2 * pi, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("inter-plane Ewald agrees with the direct sum") {
  // Off-axis directions: along a lattice axis the square window leaves an
  // O(1/(k L^2)) edge error of ~1e-5 at L = 500.
  for (double b : {1.0, 2.0, 10.0}) {
    for (double ka : {0.4, 1.0, 2.0, pi}) {
      for (double phi : {pi / 8, pi / 4, 5 * pi / 8, 7 * pi / 6}) {
        const WaveVector k = from_polar(ka, phi);
        const CouplingTensor e = d_inter_ewald(k, b);
        const CouplingTensor d = d_tensor_direct(k, {250, 1}, b);
        CHECK(max_abs_diff(e, d) <= 1e-5);
        CHECK(max_abs_diff(e, d) <= tail_bound({250, 1}, b));
        CHECK(trace_residual(e) <= 1e-10);
        CHECK(hermitian_residual(e) <= 1e-12);
      }
    }
  }
}

TEST_CASE("inter-plane Ewald along an axis with a larger window") {
  const WaveVector k{1.0, 0.0};
  const CouplingTensor e = d_inter_ewald(k, 1.0);
  const double err_500 = max_abs_diff(e, d_tensor_direct(k, {500, 1}, 1.0));
  const double err_1000 = max_abs_diff(e, d_tensor_direct(k, {1000, 1}, 1.0));
  CHECK(err_1000 < 5e-6);
  // Along the axis the window edge error falls only algebraically (about L^-1.7 here).
  CHECK(err_500 > 2.0 * err_1000);
  CHECK(err_500 < 8.0 * err_1000);
}

TEST_CASE("truncation of the reciprocal window") {
  for (double b : {1.0, 2.0, 5.0}) {
    for (double ka : {0.05, 1.0, pi}) {
      for (double phi : {0.0, 0.7, pi / 2}) {
        const WaveVector k = from_polar(ka, phi);
        const double diff = max_abs_diff(d_inter_ewald(k, b, {4, 30, 8}), d_inter_ewald(k, b, {8, 30, 8}));
        // Leading omitted shell has G >= 4.5 pi; the polynomial prefactor of
        // the second derivatives lifts b = a to a few 1e-10.
        CHECK(diff <= (b >= 2.0 ? 1e-12 : 1e-9));
      }
    }
  }
}

TEST_CASE("inter-plane coupling decays exponentially with separation") {
  const WaveVector k = from_polar(0.5, 0.3);
  std::vector<double> bs, logs;
  for (double b = 5.0; b <= 15.0; b += 1.0) {
    bs.push_back(b);
    logs.push_back(std::log(std::abs(d_inter_ewald(k, b)(2, 2).real())));
  }
  for (std::size_t i = 1; i < bs.size(); ++i) {
    const double slope = (logs[i] - logs[i - 1]) / (bs[i] - bs[i - 1]);
    CHECK(rel(slope, -0.5) < 1e-3);
  }
}

TEST_CASE("in-plane series at k = 0 and in the long-wavelength limit") {
  CHECK(rel(s_intra_axis({0, 0}, Axis::x), kF) < 1e-13);
  CHECK(rel(s_intra_axis({0, 0}, Axis::y), kF) < 1e-13);

  // S_x(k) = F - (2 pi / 3)(kx^2 / k + k) + O(k^2) from the 1/r^3 continuum.
  for (double phi : {0.0, 0.5, pi / 4, 1.3, pi / 2}) {
    for (double ka : {1e-6, 1e-4}) {
      const WaveVector k = from_polar(ka, phi);
      const double expected = kF - 2 * pi / 3 * (k.kxa * k.kxa / ka + ka);
      CHECK(std::abs(s_intra_axis(k, Axis::x) - expected) < 10 * ka * ka + 1e-11);
    }
  }
  const CouplingTensor d = d_intra_ewald(from_polar(1e-6, 0.3));
  CHECK(std::abs(d(0, 0).real() + kF) < 1e-5);
  CHECK(std::abs(d(1, 1).real() + kF) < 1e-5);
  CHECK(std::abs(d(2, 2).real() - 2 * kF) < 1e-5);
  CHECK(std::abs(d(0, 1).real()) < 1e-5);
}

TEST_CASE("in-plane series is continuous through tiny k_y") {
  // Exercises the closed-form, continuum-tail and long-column paths.
  for (double kx : {0.3, 2e-5, 1e-8}) {
    const double at_zero = s_intra_axis({kx, 0.0}, Axis::x);
    for (double ky : {1e-13, 1e-10, 1e-7, 3e-6, 1e-4}) {
      const double k = std::hypot(kx, ky);
      const double change = s_intra_axis({kx, ky}, Axis::x) - at_zero;
      // Continuum prediction of the change, plus O(k^2) slack.
      const double predicted =
          -2 * pi / 3 * (kx * kx / k + k) + 2 * pi / 3 * (std::abs(kx) + std::abs(kx));
      CHECK(std::abs(change - predicted) < 10 * k * k + 1e-10);
    }
  }
}

TEST_CASE("in-plane symmetries") {
  const EwaldConfig cfg;
  for (double t : {0.2, 1.0, 2.5}) CHECK(s_intra_axis({t, t}, Axis::x) == s_intra_axis({t, t}, Axis::y));
  CHECK(s_intra_axis({0.3, 1.2}, Axis::x) == s_intra_axis({1.2, 0.3}, Axis::y));
  for (double kx : {0.0, 0.4, 1.9, pi}) CHECK(std::abs(d_xy_intra({kx, 0.0}, cfg)) <= 1e-12);
  CHECK(std::abs(d_xy_intra(from_polar(1e-8, 0.8), cfg)) < 1e-6);
  for (const WaveVector k : {WaveVector{0.3, 0.9}, WaveVector{-2.0, 1.1}, WaveVector{1e-3, 2e-3}}) {
    const CouplingTensor d = d_intra_ewald(k);
    CHECK(trace_residual(d) <= 1e-8);
    CHECK(hermitian_residual(d) == 0.0);
  }
}

TEST_CASE("in-plane Ewald agrees with the direct sum") {
  const WaveVector ks[] = {{1.0, 1.0}, {0.3, 0.7}, {2.0, -1.0}, {-0.5, 1.3}};
  for (const WaveVector& k : ks) {
    const CouplingTensor e = d_intra_ewald(k);
    const CouplingTensor d = d_tensor_direct(k, {1000, 0}, 1.0);
    CHECK(max_abs_diff(e, d) <= 1e-6);
    CHECK(std::abs(d_xy_intra(k) - d(0, 1).real()) <= 1e-6);
  }
}

TEST_CASE("f_constant") {
  CHECK(f_constant(0) == doctest::Approx(4 * pi * pi / 9).epsilon(1e-15));
  CHECK(f_constant(0) == doctest::Approx(4.3865).epsilon(1e-4));
  const double f = f_constant();
  CHECK(f >= 4.51);
  CHECK(f <= 4.52);
  CHECK(rel(f, kF) < 1e-14);
  CHECK(std::abs(f - 4.5) / 4.5 < 5e-3);
  CHECK(f_constant(1) < f_constant(2));
  CHECK(rel(f_constant(3), f) > 1e-10);
  CHECK(rel(f_constant(5), f) < 1e-13);
  CHECK_THROWS_AS(f_constant(-1), std::domain_error);
  CHECK_THROWS_AS(f_constant(EwaldConfig{6, 30, 0}), std::domain_error);
}
