#include "latticesum/cli/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace latticesum::cli {

namespace {

using nlohmann::json;
using std::numbers::pi;

double positive_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || !(x > 0.0)) throw ConfigError(key, "must be positive");
  return x;
}

int integer_at_least(const json& v, const std::string& key, int lo) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 1'000'000'000) throw ConfigError(key, "must be >= " + std::to_string(lo));
  return static_cast<int>(x);
}

double theta_value(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double t = v.get<double>();
  if (!(t >= 0.0 && t <= pi)) throw ConfigError(key, "must lie in [0, pi]");
  return t;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) throw ConfigError(prefix + key, "unknown key");
}

}  // namespace

RunConfig::RunConfig() : theta{0.0, pi / 6.0, pi / 5.0, pi / 4.0, pi / 3.0, pi / 2.0} {}

Method RunConfig::engine() const {
  switch (method) {
    case MethodKind::direct: return DirectMethod{direct_cutoff};
    case MethodKind::longwave: return LongWaveMethod{};
    case MethodKind::ewald: break;
  }
  return EwaldMethod{ewald};
}

LatticeGeometry RunConfig::geometry() const {
  return {a_angstrom, b_over_a, n_sites, n_planes};
}

EnergyScale RunConfig::energy_scale() const {
  return {j0_scale(mu_e_angstrom, a_angstrom), ea_ev};
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "top level must be a JSON object");

  static const std::set<std::string> kKeys = {
      "a_angstrom", "b_over_a", "mu_e_angstrom", "ea_ev", "theta", "phi_points",
      "ka_values", "k_direction", "n_sites", "n_planes", "method", "direct_cutoff",
      "ewald", "nearest_only", "output_path"};
  check_keys(doc, kKeys, "");

  RunConfig cfg;
  if (doc.contains("a_angstrom")) cfg.a_angstrom = positive_number(doc["a_angstrom"], "a_angstrom");
  if (doc.contains("b_over_a")) cfg.b_over_a = positive_number(doc["b_over_a"], "b_over_a");
  if (doc.contains("mu_e_angstrom"))
    cfg.mu_e_angstrom = positive_number(doc["mu_e_angstrom"], "mu_e_angstrom");
  if (doc.contains("ea_ev")) cfg.ea_ev = positive_number(doc["ea_ev"], "ea_ev");

  if (doc.contains("theta")) {
    const json& t = doc["theta"];
    cfg.theta.clear();
    if (t.is_array()) {
      if (t.empty()) throw ConfigError("theta", "must not be empty");
      for (std::size_t i = 0; i < t.size(); ++i)
        cfg.theta.push_back(theta_value(t[i], "theta[" + std::to_string(i) + "]"));
    } else {
      cfg.theta.push_back(theta_value(t, "theta"));
    }
  }

  if (doc.contains("phi_points")) cfg.phi_points = integer_at_least(doc["phi_points"], "phi_points", 1);

  if (doc.contains("ka_values")) {
    const json& ks = doc["ka_values"];
    if (!ks.is_array() || ks.empty()) throw ConfigError("ka_values", "expected a non-empty array");
    cfg.ka_values.clear();
    for (std::size_t i = 0; i < ks.size(); ++i)
      cfg.ka_values.push_back(positive_number(ks[i], "ka_values[" + std::to_string(i) + "]"));
  }

  if (doc.contains("k_direction")) {
    const json& d = doc["k_direction"];
    if (d.is_string()) {
      if (d.get<std::string>() != "grid") throw ConfigError("k_direction", "expected an angle or \"grid\"");
      cfg.k_direction.reset();
    } else if (d.is_number() && std::isfinite(d.get<double>())) {
      cfg.k_direction = d.get<double>();
    } else {
      throw ConfigError("k_direction", "expected an angle or \"grid\"");
    }
  }

  if (doc.contains("n_sites")) {
    cfg.n_sites = integer_at_least(doc["n_sites"], "n_sites", 1);
    if (exact_isqrt(cfg.n_sites) < 0) throw ConfigError("n_sites", "must be a perfect square");
  }
  if (doc.contains("n_planes")) cfg.n_planes = integer_at_least(doc["n_planes"], "n_planes", 1);

  if (doc.contains("method")) {
    const json& m = doc["method"];
    const std::string name = m.is_string() ? m.get<std::string>() : "";
    if (name == "direct") cfg.method = MethodKind::direct;
    else if (name == "ewald") cfg.method = MethodKind::ewald;
    else if (name == "longwave") cfg.method = MethodKind::longwave;
    else throw ConfigError("method", "expected \"direct\", \"ewald\" or \"longwave\"");
  }
  if (doc.contains("direct_cutoff"))
    cfg.direct_cutoff = integer_at_least(doc["direct_cutoff"], "direct_cutoff", 1);

  if (doc.contains("ewald")) {
    const json& e = doc["ewald"];
    if (!e.is_object()) throw ConfigError("ewald", "expected an object");
    check_keys(e, {"n_max", "l_max", "bessel_n_max"}, "ewald.");
    if (e.contains("n_max")) cfg.ewald.n_max = integer_at_least(e["n_max"], "ewald.n_max", 1);
    if (e.contains("l_max")) cfg.ewald.l_max = integer_at_least(e["l_max"], "ewald.l_max", 1);
    if (e.contains("bessel_n_max"))
      cfg.ewald.bessel_n_max = integer_at_least(e["bessel_n_max"], "ewald.bessel_n_max", 1);
  }

  if (doc.contains("nearest_only")) {
    if (!doc["nearest_only"].is_boolean()) throw ConfigError("nearest_only", "expected a boolean");
    cfg.nearest_only = doc["nearest_only"].get<bool>();
  }
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) throw ConfigError("output_path", "expected a string");
    cfg.output_path = doc["output_path"].get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace latticesum::cli
