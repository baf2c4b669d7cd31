#include "latticesum/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latticesum {

namespace {
constexpr double kElementaryCharge = 1.602176634e-19;   // C, exact
constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
constexpr double kMetresPerAngstrom = 1e-10;
}  // namespace

int exact_isqrt(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? static_cast<int>(r) : -1;
}

void LatticeGeometry::validate() const {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("lattice constant must be positive");
  if (!(b_over_a > 0.0) || !std::isfinite(b_over_a))
    throw std::domain_error("layer separation must be positive");
  if (n_planes < 1) throw std::domain_error("need at least one plane");
  if (n_sites < 1 || exact_isqrt(n_sites) < 0)
    throw std::domain_error("site count " + std::to_string(n_sites) + " is not a perfect square");
}

void TransitionDipole::validate() const {
  if (!(magnitude > 0.0)) throw std::domain_error("dipole magnitude must be positive");
  if (std::abs(direction.squaredNorm() - 1.0) > 1e-12)
    throw std::domain_error("dipole direction must be a unit vector");
}

double WaveVector::norm() const { return std::hypot(kxa, kya); }

WaveVector from_polar(double ka, double phi) { return {ka * std::cos(phi), ka * std::sin(phi)}; }

double hermitian_residual(const CouplingTensor& d) {
  return (d - d.adjoint()).cwiseAbs().maxCoeff();
}

double trace_residual(const CouplingTensor& d) { return std::abs(d.trace()); }

double coulomb_ev_angstrom() {
  // e^2/(4 pi eps0) [J m] / e [J/eV] / 1e-10 [m/Angstrom]
  return kElementaryCharge / (4.0 * std::numbers::pi * kVacuumPermittivity) / kMetresPerAngstrom;
}

Eigen::Vector3d dipole_from_theta(double theta) {
  return {std::sin(theta), 0.0, std::cos(theta)};
}

double j0_scale(double mu, double a) {
  if (!(mu > 0.0) || !(a > 0.0))
    throw std::domain_error("j0_scale needs positive dipole and lattice constant");
  return mu * mu * coulomb_ev_angstrom() / (a * a * a);
}

std::vector<WaveVector> make_k_grid(const LatticeGeometry& geometry) {
  const int side = exact_isqrt(geometry.n_sites);
  if (geometry.n_sites < 1 || side < 0)
    throw std::domain_error("site count " + std::to_string(geometry.n_sites) +
                            " is not a perfect square");
  const int pmax = side / 2;
  const double step = 2.0 * std::numbers::pi / side;

  std::vector<WaveVector> grid;
  grid.reserve(static_cast<std::size_t>((2 * pmax + 1) * (2 * pmax + 1)));
  for (int p = -pmax; p <= pmax; ++p)
    for (int q = -pmax; q <= pmax; ++q) grid.push_back({step * p, step * q});
  return grid;
}

}  // namespace latticesum
