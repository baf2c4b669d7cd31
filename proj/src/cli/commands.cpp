#include "latticesum/cli/commands.hpp"

#include "latticesum/direct_sum.hpp"
#include "latticesum/dispersion.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace latticesum::cli {

namespace {

using std::numbers::pi;

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::string_view header) : out_(out) { out_ << header << '\n'; }

  CsvWriter& operator<<(double x) { return field(format_number(x)); }
  CsvWriter& operator<<(std::int64_t x) { return field(std::to_string(x)); }
  CsvWriter& operator<<(int x) { return field(std::to_string(x)); }
  CsvWriter& operator<<(std::string_view s) { return field(s); }

  void end_row() {
    out_ << '\n';
    first_ = true;
  }

 private:
  CsvWriter& field(std::string_view s) {
    if (!first_) out_ << ',';
    out_ << s;
    first_ = false;
    return *this;
  }

  std::ostream& out_;
  bool first_ = true;
};

TransitionDipole dipole_for(double theta) { return {dipole_from_theta(theta), 1.0}; }

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) throw std::domain_error("refusing to write a non-finite value");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<WaveVector> wave_vectors(const RunConfig& cfg) {
  std::vector<WaveVector> ks;
  if (cfg.k_direction) {
    for (double ka : cfg.ka_values) ks.push_back(from_polar(ka, *cfg.k_direction));
    return ks;
  }
  const bool keep_origin = cfg.method == MethodKind::direct;
  for (const WaveVector& k : make_k_grid(cfg.geometry()))
    if (keep_origin || k.norm() > 0.0) ks.push_back(k);
  return ks;
}

void cmd_sweep_phi(const RunConfig& cfg, std::ostream& out) {
  const Method method = cfg.engine();
  CsvWriter csv(out, "theta,phi,ka,b_over_a,jprime_over_j0");
  for (double theta : cfg.theta) {
    const TransitionDipole dipole = dipole_for(theta);
    for (double ka : cfg.ka_values) {
      for (int i = 0; i < cfg.phi_points; ++i) {
        const double phi = 2.0 * pi * i / cfg.phi_points;
        const double jp = j_inter(from_polar(ka, phi), dipole, cfg.b_over_a, method);
        csv << theta << phi << ka << cfg.b_over_a << jp;
        csv.end_row();
      }
    }
  }
}

void cmd_dispersion(const RunConfig& cfg, std::ostream& out) {
  const Method method = cfg.engine();
  const TransitionDipole dipole = dipole_for(cfg.theta.front());
  const LatticeGeometry geometry = cfg.geometry();
  const EnergyScale scale = cfg.energy_scale();
  CsvWriter csv(out, "kxa,kya,j_over_j0,jprime_over_j0,mode_index,energy_ev");
  for (const WaveVector& k : wave_vectors(cfg)) {
    const Eigen::MatrixXd h = stack_matrix(k, dipole, geometry, method, cfg.nearest_only);
    const double j = h(0, 0);
    const double jp = geometry.n_planes > 1 ? h(0, 1) : j_inter(k, dipole, cfg.b_over_a, method);
    const ModeSpectrum spectrum = stack_spectrum(k, dipole, geometry, method, cfg.nearest_only, scale);
    for (std::size_t mode = 0; mode < spectrum.energies_ev.size(); ++mode) {
      csv << k.kxa << k.kya << j << jp << static_cast<int>(mode) << spectrum.energies_ev[mode];
      csv.end_row();
    }
  }
}

std::vector<ConvergenceRow> convergence_rows(const RunConfig& cfg) {
  const std::vector<WaveVector> ks = wave_vectors(cfg);
  if (ks.empty()) throw ConfigError("ka_values", "no wave vector to evaluate");
  const WaveVector k = ks.front();
  const double b = cfg.b_over_a;

  EwaldConfig reference_cfg = cfg.ewald;
  reference_cfg.n_max = 12;
  const double reference = d_inter_ewald(k, b, reference_cfg)(2, 2).real();

  using Clock = std::chrono::steady_clock;
  auto elapsed_ns = [](Clock::time_point start) {
    return static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
  };

  std::vector<ConvergenceRow> rows;
  for (int cutoff : {10, 30, 100, 300, 1000}) {
    const auto start = Clock::now();
    const double v = d_tensor_direct(k, {cutoff, 1}, b)(2, 2).real();
    const std::int64_t side = 2 * cutoff + 1;
    rows.push_back({"direct", side * side, v, std::abs(v - reference), elapsed_ns(start)});
  }
  for (int n_max = 1; n_max <= 8; ++n_max) {
    EwaldConfig ecfg = cfg.ewald;
    ecfg.n_max = n_max;
    const auto start = Clock::now();
    const double v = d_inter_ewald(k, b, ecfg)(2, 2).real();
    const std::int64_t side = 2 * n_max + 1;
    rows.push_back({"ewald", side * side, v, std::abs(v - reference), elapsed_ns(start)});
  }
  return rows;
}

void cmd_convergence(const RunConfig& cfg, std::ostream& out) {
  const auto rows = convergence_rows(cfg);
  CsvWriter csv(out, "engine,terms,value_dzz,abs_err_vs_reference,wall_time_ns");
  for (const auto& r : rows) {
    csv << r.engine << r.terms << r.value_dzz << r.abs_err << r.wall_time_ns;
    csv.end_row();
  }
}

void cmd_stack(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_planes < 2) throw ConfigError("n_planes", "stack needs at least 2 planes");
  const Method method = cfg.engine();
  const TransitionDipole dipole = dipole_for(cfg.theta.front());
  const LatticeGeometry geometry = cfg.geometry();
  CsvWriter csv(out, "kxa,kya,mode_index,energy_over_j0");
  for (const WaveVector& k : wave_vectors(cfg)) {
    const ModeSpectrum spectrum =
        stack_spectrum(k, dipole, geometry, method, cfg.nearest_only, cfg.energy_scale());
    for (std::size_t mode = 0; mode < spectrum.energies_j0.size(); ++mode) {
      csv << k.kxa << k.kya << static_cast<int>(mode) << spectrum.energies_j0[mode];
      csv.end_row();
    }
  }
}

int run(const std::string& command, const std::string& config_path,
        const std::string& out_override, std::ostream& err) {
  using Command = void (*)(const RunConfig&, std::ostream&);
  Command fn = nullptr;
  if (command == "sweep-phi") fn = cmd_sweep_phi;
  else if (command == "dispersion") fn = cmd_dispersion;
  else if (command == "convergence") fn = cmd_convergence;
  else if (command == "stack") fn = cmd_stack;
  else {
    err << "latticesum: unknown command '" << command << "'\n";
    return 2;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (!out_override.empty()) cfg.output_path = out_override;

    // Render fully before touching the output so failures leave no partial file.
    std::ostringstream buffer;
    fn(cfg, buffer);

    if (cfg.output_path.empty()) {
      std::cout << buffer.str() << std::flush;
      if (!std::cout) throw IoError("failed writing to stdout");
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open '" + cfg.output_path + "' for writing");
      file << buffer.str();
      file.flush();
      if (!file) throw IoError("failed writing '" + cfg.output_path + "'");
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "latticesum: config error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "latticesum: I/O error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "latticesum: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace latticesum::cli
