#pragma once

#include "latticesum/direct_sum.hpp"
#include "latticesum/model.hpp"

namespace latticesum {

/// Truncation of the exponentially convergent series.
///
/// n_max bounds the reciprocal indices |n|, |m| of the inter-plane series and
/// |n| of the in-plane Bessel series. l_max is the minimum real-space extent of
/// each in-plane Bessel column; columns whose argument grows slowly (small
/// |2 pi n + k a|) are extended until the Bessel factor has decayed below
/// exp(-60). bessel_n_max truncates both indices of the double series for F.
struct EwaldConfig {
  int n_max = 6;
  int l_max = 30;
  int bessel_n_max = 8;

  void validate() const;
};

/// The inter-plane series and its first and second derivatives with respect
/// to k_x a and k_y a, all without the 2 pi / (3 a^2 b^3) prefactor.
struct InterSeries {
  double s = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dxx = 0.0;
  double dyy = 0.0;
  double dxy = 0.0;
};

/// sum_{n,m} (1 + 2(b/a) G) exp(-2(b/a) G), G = |(pi n + kx a/2, pi m + ky a/2)|,
/// truncated at |n|, |m| <= n_max. Equals 3 a^2 b^3 S(k) / (2 pi).
double s_inter_series(const WaveVector& k, double b_over_a, const EwaldConfig& cfg = {});

/// Same series together with its analytic term-wise derivatives. Throws
/// std::domain_error when some G vanishes (k on the reciprocal lattice), where
/// the second derivatives depend on the approach direction.
InterSeries s_inter_derivatives(const WaveVector& k, double b_over_a, const EwaldConfig& cfg = {});

/// Inter-plane dynamical matrix for layer separation b, built by applying the
/// second-order differential operators in k to the exponential series.
/// Throws std::domain_error at k = 0, where the tensor is direction dependent;
/// d_tensor_direct is the defined value there.
CouplingTensor d_inter_ewald(const WaveVector& k, double b_over_a, const EwaldConfig& cfg = {});

/// Leading (n, m) = (0, 0) term only: the long-wavelength closed form
///   D_ij = 2 pi exp(-kb) * [[kx^2/k, kx ky/k, -i kx], [., ky^2/k, -i ky], [., ., -k]]
/// in units of a. Throws std::domain_error at k = 0.
CouplingTensor d_inter_longwave(const WaveVector& k, double b_over_a);

/// In-plane S_x(k) = sum' l_x^2 / (l_x^2 + l_y^2)^{5/2} exp(i k.l) from its
/// Bessel-K column series; Axis::y swaps the roles of k_x and k_y.
double s_intra_axis(const WaveVector& k, Axis axis, const EwaldConfig& cfg = {});

/// In-plane D_xy(k) from the K1 column series, with sign(2 pi n + k_y a)
/// carried explicitly so that only positive Bessel arguments appear.
double d_xy_intra(const WaveVector& k, const EwaldConfig& cfg = {});

/// In-plane dynamical matrix: D_xx = -2 S_x + S_y, D_yy = -2 S_y + S_x,
/// D_zz = S_x + S_y, D_xy from d_xy_intra, D_xz = D_yz = 0.
CouplingTensor d_intra_ewald(const WaveVector& k, const EwaldConfig& cfg = {});

/// F = 4 pi^2 / 9 + (32 pi^2 / 3) sum_{n,m=1}^{terms} n^2 K2(2 pi n m), the
/// k -> 0 value of S_x. terms = 0 leaves the leading 4 pi^2 / 9.
double f_constant(int terms);
double f_constant(const EwaldConfig& cfg = {});

}  // namespace latticesum
