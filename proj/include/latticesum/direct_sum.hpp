#pragma once

#include "latticesum/model.hpp"

namespace latticesum {

/// Square summation window l_x, l_y in [-cutoff, cutoff] for the plane that
/// sits layer_offset layers above the reference plane.
struct DirectSumConfig {
  int cutoff = 500;
  int layer_offset = 0;

  void validate() const;
};

enum class Axis { x = 0, y = 1, z = 2 };

/// delta_ij / r^3 - 3 r_i r_j / r^5 for r = (lx, ly, lz_scaled) in units of a.
/// Throws std::domain_error for the zero separation.
double dyadic_term(int lx, int ly, double lz_scaled, Axis i, Axis j);

/// Brute-force sum of the Fourier-weighted dipole dyadic over the window,
/// sum_R D_ij(R) exp(i k.R), with the origin dropped for the in-plane case.
/// The upper triangle is summed; the lower triangle is its conjugate.
/// Accumulation is compensated and runs in a fixed order, so the result is
/// bit-reproducible.
CouplingTensor d_tensor_direct(const WaveVector& k, const DirectSumConfig& cfg, double b_over_a);

/// Rigorous bound on the absolute truncation error of any component of
/// d_tensor_direct: |D_ij(R)| <= 2/r^3 and the discarded lattice points fill
/// the region outside the disc of radius cutoff + 1/2, giving
/// 4 pi / sqrt((L + 1/2)^2 + (l_z b/a)^2).
double tail_bound(const DirectSumConfig& cfg, double b_over_a);

}  // namespace latticesum
