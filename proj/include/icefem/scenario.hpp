#pragma once

#include <Eigen/Dense>

#include "icefem/constitutive.hpp"
#include "icefem/dofmap.hpp"
#include "icefem/mesh.hpp"

namespace icefem {

// Benchmark forcing on the unit square, coordinates in [0,1]^2 and time in
// days.  Callers on a scaled mesh divide physical coordinates by the domain
// length first.

// Smooth amplitude factor for the wind vortex; exactly 0 at t = 0 and close
// to 1 from mid-simulation on.
double wind_switch_factor(double t_days);

// Angle between the radial direction and the wind; jumps from 16pi/40 to
// 18pi/40 as the vortex turns anticyclonic at day 4.
double wind_rotation_angle(double t_days);

Eigen::Vector2d wind_center(double t_days);

Eigen::Matrix2d rotation(double angle);

Eigen::Vector2d wind(const Eigen::Vector2d& x, double t_days, double v_a_max);

Eigen::Vector2d ocean(const Eigen::Vector2d& x, double v_o_max);

double initial_thickness(const Eigen::Vector2d& x);

struct ScenarioState {
  Eigen::VectorXd sigma;
  Eigen::VectorXd u;
  Eigen::VectorXd A;
  Eigen::VectorXd H;
};

// Ice at rest with fully compact cover, wavy thickness and the stress that
// balances zero strain rate.
ScenarioState initial_state(const Mesh& mesh, const DofMap& dm_sigma,
                            const DofMap& dm_u, const DofMap& dm_tracer,
                            const PhysParamsT<double>& params, double scale);

}  // namespace icefem
