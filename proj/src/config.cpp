#include "icefem/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icefem {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
  }
  if (pos != v.size())
    throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  if (x != std::floor(x) || std::abs(x) > 1e9)
    throw std::invalid_argument("config: expected integer for " + key);
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: bad bool for " + key + ": '" + v + "'");
}

}  // namespace

void apply_override(BenchmarkConfig& cfg, const std::string& key,
                    const std::string& value) {
  const std::string v = trim(value);

  if (key == "mesh.n") cfg.n = parse_int(key, v);
  else if (key == "mesh.scale") cfg.scale = parse_double(key, v);
  else if (key == "mesh.elements") cfg.elements = v;

  else if (key == "time.dt_seconds") cfg.dt_seconds = parse_double(key, v);
  else if (key == "time.T_days") cfg.T_days = parse_double(key, v);
  else if (key == "time.theta") cfg.theta = parse_double(key, v);

  else if (key == "physics.rho_ice") cfg.params.rho_ice = parse_double(key, v);
  else if (key == "physics.rho_air") cfg.params.rho_a = parse_double(key, v);
  else if (key == "physics.rho_ocean") cfg.params.rho_o = parse_double(key, v);
  else if (key == "physics.C_air") cfg.params.C_a = parse_double(key, v);
  else if (key == "physics.C_ocean") cfg.params.C_o = parse_double(key, v);
  else if (key == "physics.f_c") cfg.params.f_c = parse_double(key, v);
  else if (key == "physics.P_star") cfg.params.P_star = parse_double(key, v);
  else if (key == "physics.C") cfg.params.C_conc = parse_double(key, v);
  else if (key == "physics.delta_min") cfg.params.delta_min = parse_double(key, v);
  else if (key == "physics.v_a_max") cfg.params.v_a_max = parse_double(key, v);
  else if (key == "physics.v_o_max") cfg.params.v_o_max = parse_double(key, v);
  else if (key == "physics.trace_factor") cfg.trace_factor = parse_double(key, v);

  else if (key == "solver.quad_order") cfg.quad_order = parse_int(key, v);
  else if (key == "solver.gn_tol") cfg.gn_tol = parse_double(key, v);
  else if (key == "solver.gn_max_iter") cfg.gn_max_iter = parse_int(key, v);
  else if (key == "solver.method") cfg.solver_method = v;
  else if (key == "solver.cg_tol") cfg.cg_tol = parse_double(key, v);

  else if (key == "output.dir") cfg.out_dir = v;
  else if (key == "output.cadence_hours") cfg.cadence_hours = parse_double(key, v);
  else if (key == "output.write_vtk") cfg.write_vtk = parse_bool(key, v);
  else if (key == "output.write_csv") cfg.write_csv = parse_bool(key, v);

  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

BenchmarkConfig parse_config(const std::string& text) {
  BenchmarkConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": key outside any [section]");
    apply_override(cfg, section + "." + key, value);
  }
  validate(cfg);
  return cfg;
}

BenchmarkConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

int cadence_steps(const BenchmarkConfig& cfg) {
  const int k = static_cast<int>(std::lround(cfg.cadence_hours * 3600.0 / cfg.dt_seconds));
  return std::max(1, k);
}

void validate(const BenchmarkConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("config: mesh.n must be >= 1");
  if (cfg.scale <= 0) throw std::invalid_argument("config: mesh.scale must be > 0");
  if (cfg.elements != "rt0p1" && cfg.elements != "rt1p2")
    throw std::invalid_argument("config: mesh.elements must be rt0p1 or rt1p2");
  if (cfg.dt_seconds <= 0) throw std::invalid_argument("config: time.dt_seconds must be > 0");
  if (cfg.T_days < 0) throw std::invalid_argument("config: time.T_days must be >= 0");
  if (cfg.theta < 0 || cfg.theta > 1)
    throw std::invalid_argument("config: time.theta must be in [0,1]");
  if (cfg.trace_factor != 1.0 && cfg.trace_factor != 2.0)
    throw std::invalid_argument("config: physics.trace_factor must be 1 or 2");
  if (cfg.quad_order < 1 || cfg.quad_order > 6)
    throw std::invalid_argument("config: solver.quad_order must be in 1..6");
  if (cfg.gn_max_iter < 1) throw std::invalid_argument("config: solver.gn_max_iter must be >= 1");
  if (cfg.solver_method != "auto" && cfg.solver_method != "direct" &&
      cfg.solver_method != "cg")
    throw std::invalid_argument("config: solver.method must be auto, direct or cg");
  if (cfg.cadence_hours <= 0)
    throw std::invalid_argument("config: output.cadence_hours must be > 0");
}

}  // namespace icefem
