#include "icefem/scenario.hpp"

#include <cmath>

#include "icefem/fields.hpp"

namespace icefem {

double wind_switch_factor(double t_days) {
  const double tm = t_days - 4.0;
  return 1.0 - 2.0 / (std::exp(tm) * std::exp(8.0 - std::abs(tm)) + 1.0);
}

double wind_rotation_angle(double t_days) {
  const double tm = t_days - 4.0;
  const double sign = tm > 0.0 ? 1.0 : (tm < 0.0 ? -1.0 : 0.0);
  return 17.0 / 40.0 * M_PI + sign * M_PI / 40.0;
}

Eigen::Vector2d wind_center(double t_days) {
  const double tm = t_days - 4.0;
  const double xm = 0.1 * (9.0 - std::abs(tm));
  return {xm, xm};
}

Eigen::Matrix2d rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2d R;
  R << c, -s, s, c;
  return R;
}

Eigen::Vector2d wind(const Eigen::Vector2d& x, double t_days, double v_a_max) {
  const Eigen::Vector2d xt = x - wind_center(t_days);
  const double amp =
      10.0 * v_a_max * wind_switch_factor(t_days) * std::exp(-xt.norm() / 10.0);
  return amp * (rotation(wind_rotation_angle(t_days)) * xt);
}

Eigen::Vector2d ocean(const Eigen::Vector2d& x, double v_o_max) {
  return v_o_max * Eigen::Vector2d(2.0 * x.y() - 1.0, 1.0 - 2.0 * x.x());
}

double initial_thickness(const Eigen::Vector2d& x) {
  return 0.3 + 0.005 * (std::sin(250.0 * x.x()) + std::sin(250.0 * x.y()));
}

ScenarioState initial_state(const Mesh& mesh, const DofMap& dm_sigma,
                            const DofMap& dm_u, const DofMap& dm_tracer,
                            const PhysParamsT<double>& params, double scale) {
  ScenarioState s;
  s.u = Eigen::VectorXd::Zero(dm_u.n_global);

  s.A = interpolate_lagrange(mesh, dm_tracer, scale, [](const Eigen::Vector2d&) {
    return Eigen::VectorXd::Ones(1);
  });
  s.H = interpolate_lagrange(mesh, dm_tracer, scale, [&](const Eigen::Vector2d& x) {
    Eigen::VectorXd v(1);
    v(0) = initial_thickness(x / scale);
    return v;
  });

  // zero strain rate: sigma = -(P/2) I, with P from the analytic thickness
  s.sigma = interpolate_rt(mesh, dm_sigma, scale, [&](const Eigen::Vector2d& x) {
    const double P = ice_strength(1.0, initial_thickness(x / scale), params);
    Eigen::Matrix2d m = -0.5 * P * Eigen::Matrix2d::Identity();
    return Eigen::MatrixXd(m);
  });
  return s;
}

}  // namespace icefem
