#pragma once

#include "latticesum/ewald.hpp"
#include "latticesum/model.hpp"

#include <Eigen/Core>

#include <variant>
#include <vector>

namespace latticesum {

/// Brute-force window sum at the given cutoff.
struct DirectMethod {
  int cutoff = 500;
};

/// Exponentially convergent series.
struct EwaldMethod {
  EwaldConfig config;
};

/// ka << 1 closed forms: in-plane diag(-F, -F, 2F), inter-plane leading term.
struct LongWaveMethod {};

using Method = std::variant<DirectMethod, EwaldMethod, LongWaveMethod>;

/// In-plane dynamical matrix from the selected engine.
CouplingTensor intra_tensor(const WaveVector& k, const Method& method);

/// Inter-plane dynamical matrix for separation b_over_a from the selected engine.
CouplingTensor inter_tensor(const WaveVector& k, double b_over_a, const Method& method);

/// sum_ij m_i m_j D_ij for a unit dipole. Throws std::logic_error if the
/// imaginary residual exceeds 1e-12 * max(1, max|D_ij|).
double contract(const CouplingTensor& d, const Eigen::Vector3d& dipole);

/// J(k) / J0.
double j_intra(const WaveVector& k, const TransitionDipole& dipole, const Method& method);

/// J'(k) / J0 between planes b_over_a apart.
double j_inter(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
               const Method& method);

/// Exciton energies at one k, ascending.
struct ModeSpectrum {
  WaveVector k;
  std::vector<double> energies_j0;  // relative to E_A
  std::vector<double> energies_ev;  // absolute
};

/// Two identical planes: E = E_A + J0 (J +- J'), the symmetric combination of
/// the two planes carrying +J'.
ModeSpectrum pair_energies(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
                           const Method& method, const EnergyScale& scale);

/// 2 |J'(k)| / J0.
double splitting(const WaveVector& k, const TransitionDipole& dipole, double b_over_a,
                 const Method& method);

/// k = 0 gap between the normal (2F) and in-plane (-F) branches, 3F in J0 units.
double polarization_splitting(double f);

/// n_planes x n_planes exciton matrix in J0 units: J on the diagonal and J'
/// at separation |alpha - beta| b off it (zero beyond the first off-diagonal
/// when nearest_only is set).
Eigen::MatrixXd stack_matrix(const WaveVector& k, const TransitionDipole& dipole,
                             const LatticeGeometry& geometry, const Method& method,
                             bool nearest_only);

/// Stack eigenvalues at one k.
ModeSpectrum stack_spectrum(const WaveVector& k, const TransitionDipole& dipole,
                            const LatticeGeometry& geometry, const Method& method,
                            bool nearest_only, const EnergyScale& scale);

}  // namespace latticesum
