#include "latticesum/dispersion.hpp"

#include "latticesum/direct_sum.hpp"
#include "latticesum/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace latticesum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

ModeSpectrum make_spectrum(const WaveVector& k, const Eigen::VectorXd& values,
                           const EnergyScale& scale) {
  ModeSpectrum out;
  out.k = k;
  out.energies_j0.assign(values.data(), values.data() + values.size());
  out.energies_ev.reserve(out.energies_j0.size());
  for (double e : out.energies_j0) out.energies_ev.push_back(scale.to_ev(e));
  return out;
}

}  // namespace

CouplingTensor intra_tensor(const WaveVector& k, const Method& method) {
  return std::visit(
      overloaded{
          [&](const DirectMethod& m) {
            return d_tensor_direct(k, {m.cutoff, 0}, 1.0);
          },
          [&](const EwaldMethod& m) { return d_intra_ewald(k, m.config); },
          [&](const LongWaveMethod&) {
            static const double f = f_constant();
            CouplingTensor d = CouplingTensor::Zero();
            d.diagonal() << -f, -f, 2.0 * f;
            return d;
          },
      },
      method);
}

CouplingTensor inter_tensor(const WaveVector& k, double b_over_a, const Method& method) {
  return std::visit(
      overloaded{
          [&](const DirectMethod& m) { return d_tensor_direct(k, {m.cutoff, 1}, b_over_a); },
          [&](const EwaldMethod& m) { return d_inter_ewald(k, b_over_a, m.config); },
          [&](const LongWaveMethod&) { return d_inter_longwave(k, b_over_a); },
      },
      method);
}

double contract(const CouplingTensor& d, const Eigen::Vector3d& dipole) {
  const Eigen::Vector3cd m = dipole.cast<std::complex<double>>();
  const std::complex<double> value = m.dot(d * m);
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  if (std::abs(value.imag()) > 1e-12 * scale)
    throw std::logic_error("dipole contraction has a non-negligible imaginary part");
  return value.real();
}

double j_intra(const WaveVector& k, const TransitionDipole& dipole, const Method& method) {
  dipole.validate();
  return contract(intra_tensor(k, method), dipole.direction);
}

double j_inter(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
               const Method& method) {
  dipole.validate();
  return contract(inter_tensor(k, b_over_a, method), dipole.direction);
}

ModeSpectrum pair_energies(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
                           const Method& method, const EnergyScale& scale) {
  const double j = j_intra(k, dipole, method);
  const double jp = j_inter(k, dipole, b_over_a, method);
  Eigen::VectorXd values(2);
  values << j - std::abs(jp), j + std::abs(jp);
  return make_spectrum(k, values, scale);
}

double splitting(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
                 const Method& method) {
  return 2.0 * std::abs(j_inter(k, dipole, b_over_a, method));
}

double polarization_splitting(double f) {
  if (!(f > 0.0)) throw std::domain_error("polarization_splitting: F must be positive");
  return 3.0 * f;
}

Eigen::MatrixXd stack_matrix(const WaveVector& k, const TransitionDipole& dipole,
                             const LatticeGeometry& geometry, const Method& method,
                             bool nearest_only) {
  geometry.validate();
  const int n = geometry.n_planes;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  h.diagonal().setConstant(j_intra(k, dipole, method));

  const int reach = nearest_only ? std::min(1, n - 1) : n - 1;
  for (int sep = 1; sep <= reach; ++sep) {
    const double jp = j_inter(k, dipole, sep * geometry.b_over_a, method);
    for (int i = 0; i + sep < n; ++i) {
      h(i, i + sep) = jp;
      h(i + sep, i) = jp;
    }
  }
  return h;
}

ModeSpectrum stack_spectrum(const WaveVector& k, const TransitionDipole& dipole,
                            const LatticeGeometry& geometry, const Method& method,
                            bool nearest_only, const EnergyScale& scale) {
  const Eigen::MatrixXd h = stack_matrix(k, dipole, geometry, method, nearest_only);
  return make_spectrum(k, symmetric_eigen(h), scale);
}

}  // namespace latticesum
