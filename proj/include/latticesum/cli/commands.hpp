#pragma once

#include "latticesum/cli/config.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace latticesum::cli {

/// Shortest round-trip decimal form of a finite double. Throws
/// std::domain_error for NaN or infinity so no such value reaches a CSV.
std::string format_number(double x);

/// Wave vectors a command iterates over: every ka along k_direction, or the
/// k-grid when k_direction is "grid". Grid points at k = 0 are dropped for
/// the ewald and longwave engines, whose inter-plane tensor is undefined there.
std::vector<WaveVector> wave_vectors(const RunConfig& cfg);

/// theta,phi,ka,b_over_a,jprime_over_j0 over phi in [0, 2 pi).
void cmd_sweep_phi(const RunConfig& cfg, std::ostream& out);

/// kxa,kya,j_over_j0,jprime_over_j0,mode_index,energy_ev for the n_planes
/// stack, dipole tilted by the first theta.
void cmd_dispersion(const RunConfig& cfg, std::ostream& out);

struct ConvergenceRow {
  std::string engine;
  std::int64_t terms = 0;
  double value_dzz = 0.0;
  double abs_err = 0.0;
  std::int64_t wall_time_ns = 0;
};

/// Inter-plane D_zz at the first wave vector by direct sums
/// (L = 10, 30, 100, 300, 1000) and Ewald series (n_max = 1..8), against the
/// Ewald series at n_max = 12.
std::vector<ConvergenceRow> convergence_rows(const RunConfig& cfg);

/// engine,terms,value_dzz,abs_err_vs_reference,wall_time_ns
void cmd_convergence(const RunConfig& cfg, std::ostream& out);

/// kxa,kya,mode_index,energy_over_j0 for n_planes >= 2.
void cmd_stack(const RunConfig& cfg, std::ostream& out);

/// Dispatches a subcommand name, writing to output_path (or stdout when
/// empty). Returns the process exit code: 0 success, 2 config error, 3 I/O
/// error, 1 anything else. Diagnostics go to err.
int run(const std::string& command, const std::string& config_path,
        const std::string& out_override, std::ostream& err);

}  // namespace latticesum::cli
