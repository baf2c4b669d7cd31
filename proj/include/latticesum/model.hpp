#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace latticesum {

/// Square-lattice stack geometry. The lattice constant is in Angstrom; every
/// other length in the library is measured in units of it.
struct LatticeGeometry {
  double a = 1000.0;
  double b_over_a = 10.0;
  int n_sites = 1;  // sites per plane, a perfect square
  int n_planes = 2;

  /// Throws std::domain_error when an invariant is broken.
  void validate() const;
};

/// Electronic transition dipole: unit direction plus magnitude in e*Angstrom.
struct TransitionDipole {
  Eigen::Vector3d direction{0.0, 0.0, 1.0};
  double magnitude = 1.0;

  void validate() const;
};

/// In-plane wave vector in dimensionless form (k_x a, k_y a).
struct WaveVector {
  double kxa = 0.0;
  double kya = 0.0;

  double norm() const;

  WaveVector operator-() const { return {-kxa, -kya}; }
};

WaveVector from_polar(double ka, double phi);

/// Dimensionless dynamical matrix a^3 D_ij(k). Lower triangle is the complex
/// conjugate of the upper triangle.
using CouplingTensor = Eigen::Matrix3cd;

/// max |D_ij - conj(D_ji)|
double hermitian_residual(const CouplingTensor& d);
/// |D_xx + D_yy + D_zz|
double trace_residual(const CouplingTensor& d);

/// Couplings are computed in units of J0; eV only appear through this scale.
struct EnergyScale {
  double j0_ev = 0.0;
  double ea_ev = 1.0;

  double to_ev(double energy_over_j0) const { return ea_ev + j0_ev * energy_over_j0; }
};

/// e^2 / (4 pi eps0) in eV*Angstrom, from the SI-exact elementary charge and
/// the CODATA 2018 vacuum permittivity.
double coulomb_ev_angstrom();

/// (sin theta, 0, cos theta)
Eigen::Vector3d dipole_from_theta(double theta);

/// J0 = mu^2 / (4 pi eps0 a^3) in eV for mu in e*Angstrom and a in Angstrom.
double j0_scale(double mu, double a);

/// Allowed wave vectors of a sqrt(N) x sqrt(N) periodic plane,
/// k a = 2 pi p / sqrt(N) with p = 0, +-1, ..., +-sqrt(N)/2. Both zone-edge
/// values are kept, so the grid has (2*floor(sqrt(N)/2) + 1)^2 points.
std::vector<WaveVector> make_k_grid(const LatticeGeometry& geometry);

/// Integer square root, or -1 when n is not a perfect square.
int exact_isqrt(long long n);

}  // namespace latticesum
