#pragma once

#include "latticesum/dispersion.hpp"
#include "latticesum/ewald.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latticesum::cli {

/// Bad configuration; key() names the offending JSON path ("ewald.n_max").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Unreadable config or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MethodKind { direct, ewald, longwave };

/// Run parameters. Defaults reproduce the optical-lattice example: E_A = 1 eV,
/// a = 1000 Angstrom, mu = 1 e*Angstrom, b = 10 a, ka = 1e-3, and the six
/// dipole tilts 0, pi/6, pi/5, pi/4, pi/3, pi/2.
struct RunConfig {
  double a_angstrom = 1000.0;
  double b_over_a = 10.0;
  double mu_e_angstrom = 1.0;
  double ea_ev = 1.0;
  std::vector<double> theta;
  int phi_points = 360;
  std::vector<double> ka_values{1e-3};
  std::optional<double> k_direction = 0.0;  // empty: wave vectors from the k-grid
  int n_sites = 100;                        // k-grid size, used with "grid" only
  int n_planes = 2;
  MethodKind method = MethodKind::ewald;
  int direct_cutoff = 500;
  EwaldConfig ewald;
  bool nearest_only = false;
  std::string output_path;

  RunConfig();

  Method engine() const;
  LatticeGeometry geometry() const;
  EnergyScale energy_scale() const;
};

/// Parses a JSON document into a RunConfig, filling defaults for missing
/// keys. Throws ConfigError for malformed JSON, unknown keys, wrong types and
/// out-of-range values.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

}  // namespace latticesum::cli
