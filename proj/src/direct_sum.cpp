#include "latticesum/direct_sum.hpp"

#include "latticesum/compensated.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace latticesum {

void DirectSumConfig::validate() const {
  if (cutoff < 1) throw std::domain_error("direct sum cutoff must be >= 1");
  if (layer_offset < 0) throw std::domain_error("layer offset must be >= 0");
}

double dyadic_term(int lx, int ly, double lz_scaled, Axis i, Axis j) {
  const double r[3] = {static_cast<double>(lx), static_cast<double>(ly), lz_scaled};
  const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  if (r2 == 0.0) throw std::domain_error("dyadic_term: zero separation");
  const double inv_r = 1.0 / std::sqrt(r2);
  const double inv_r3 = inv_r * inv_r * inv_r;
  const double inv_r5 = inv_r3 / r2;
  const auto a = static_cast<int>(i);
  const auto b = static_cast<int>(j);
  // Fixed operand order keeps the (i, j) and (j, i) entries bitwise equal.
  return (a == b ? inv_r3 : 0.0) - 3.0 * r[std::min(a, b)] * r[std::max(a, b)] * inv_r5;
}

CouplingTensor d_tensor_direct(const WaveVector& k, const DirectSumConfig& cfg, double b_over_a) {
  cfg.validate();
  if (cfg.layer_offset > 0 && !(b_over_a > 0.0))
    throw std::domain_error("layer separation must be positive");

  const int n = cfg.cutoff;
  const double s = cfg.layer_offset * b_over_a;
  const double s2 = s * s;
  const bool in_plane = cfg.layer_offset == 0;

  // exp(i k.R) factorises into row and column phases.
  std::vector<std::complex<double>> phase_x(2 * n + 1), phase_y(2 * n + 1);
  for (int l = -n; l <= n; ++l) {
    phase_x[l + n] = {std::cos(k.kxa * l), std::sin(k.kxa * l)};
    phase_y[l + n] = {std::cos(k.kya * l), std::sin(k.kya * l)};
  }

  // xx, yy, zz, xy, xz, yz
  constexpr int kComponents = 6;
  CompensatedComplexSum<double> total[kComponents];
  for (int lx = -n; lx <= n; ++lx) {
    CompensatedComplexSum<double> row[kComponents];
    const double x = lx;
    const double x2 = x * x;
    for (int ly = -n; ly <= n; ++ly) {
      if (in_plane && lx == 0 && ly == 0) continue;
      const double y = ly;
      const double r2 = x2 + y * y + s2;
      const double inv_r = 1.0 / std::sqrt(r2);
      const double inv_r3 = inv_r * inv_r * inv_r;
      const double inv_r5 = inv_r3 / r2;
      const std::complex<double> ph = phase_x[lx + n] * phase_y[ly + n];
      row[0] += ph * (inv_r3 - 3.0 * x2 * inv_r5);
      row[1] += ph * (inv_r3 - 3.0 * y * y * inv_r5);
      row[2] += ph * (inv_r3 - 3.0 * s2 * inv_r5);
      row[3] += ph * (-3.0 * x * y * inv_r5);
      if (!in_plane) {
        row[4] += ph * (-3.0 * x * s * inv_r5);
        row[5] += ph * (-3.0 * y * s * inv_r5);
      }
    }
    for (int c = 0; c < kComponents; ++c) total[c] += row[c];
  }

  CouplingTensor d;
  d(0, 0) = total[0].value();
  d(1, 1) = total[1].value();
  d(2, 2) = total[2].value();
  d(0, 1) = total[3].value();
  d(0, 2) = total[4].value();
  d(1, 2) = total[5].value();
  d(1, 0) = std::conj(d(0, 1));
  d(2, 0) = std::conj(d(0, 2));
  d(2, 1) = std::conj(d(1, 2));
  return d;
}

double tail_bound(const DirectSumConfig& cfg, double b_over_a) {
  cfg.validate();
  const double s = cfg.layer_offset * b_over_a;
  return 4.0 * std::numbers::pi / std::hypot(cfg.cutoff + 0.5, s);
}

}  // namespace latticesum
