#pragma once

#include <string>

#include "icefem/constitutive.hpp"

namespace icefem {

struct BenchmarkConfig {
  // [mesh]
  int n = 32;
  double scale = 1.0;          // physical edge length of the square (m)
  std::string elements = "rt0p1";  // rt0p1 | rt1p2

  // [time]
  double dt_seconds = 1800.0;
  double T_days = 8.0;
  double theta = 0.5;

  // [physics]
  PhysParams params;
  double trace_factor = 2.0;

  // [solver]
  int quad_order = 4;
  double gn_tol = 1e-6;
  int gn_max_iter = 50;
  std::string solver_method = "auto";  // auto | direct | cg
  double cg_tol = 1e-10;

  // [output]
  std::string out_dir = "out";
  double cadence_hours = 6.0;
  bool write_vtk = true;
  bool write_csv = true;
};

// INI-style text: [section] headers, key = value lines, # or ; comments.
BenchmarkConfig parse_config(const std::string& text);
BenchmarkConfig load_config(const std::string& path);

// key is "section.key", as accepted by the CLI --set flag.  Throws on unknown
// keys or unparsable values.
void apply_override(BenchmarkConfig& cfg, const std::string& key,
                    const std::string& value);

// Steps between output snapshots for this configuration, >= 1.
int cadence_steps(const BenchmarkConfig& cfg);

void validate(const BenchmarkConfig& cfg);

}  // namespace icefem
