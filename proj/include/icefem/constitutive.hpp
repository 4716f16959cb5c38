#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace icefem {

template <typename S>
struct PhysParamsT {
  S rho_ice = S(900);       // kg/m^3
  S rho_a = S(1.3);         // kg/m^3
  S rho_o = S(1026);        // kg/m^3
  S C_a = S(1.2e-3);
  S C_o = S(5.5e-3);
  S f_c = S(1.46e-4);       // 1/s
  S P_star = S(27.5e3);     // N/m^2
  S C_conc = S(20);
  S delta_min = S(2e-9);    // 1/s
  S v_a_max = S(15);        // m/s
  S v_o_max = S(0.01);      // m/s

  template <typename T>
  PhysParamsT<T> cast() const {
    PhysParamsT<T> p;
    p.rho_ice = T(rho_ice);
    p.rho_a = T(rho_a);
    p.rho_o = T(rho_o);
    p.C_a = T(C_a);
    p.C_o = T(C_o);
    p.f_c = T(f_c);
    p.P_star = T(P_star);
    p.C_conc = T(C_conc);
    p.delta_min = T(delta_min);
    p.v_a_max = T(v_a_max);
    p.v_o_max = T(v_o_max);
    return p;
  }
};
using PhysParams = PhysParamsT<double>;

template <typename S>
struct StrainStateT {
  Eigen::Matrix<S, 2, 2> eps;
  Eigen::Matrix<S, 2, 2> dev_eps;
  S tr_eps;
  S delta;
};
using StrainState = StrainStateT<double>;

// (-w2, w1), the 2D stand-in for e_r x w.
template <typename S>
Eigen::Matrix<S, 2, 1> perp(const Eigen::Matrix<S, 2, 1>& w) {
  return {-w.y(), w.x()};
}

template <typename S>
StrainStateT<S> strain(const Eigen::Matrix<S, 2, 2>& grad_u, S delta_min) {
  if (!grad_u.allFinite())
    throw std::invalid_argument("strain: non-finite velocity gradient");
  StrainStateT<S> st;
  st.eps = S(0.5) * (grad_u + grad_u.transpose());
  st.tr_eps = st.eps.trace();
  st.dev_eps = st.eps;
  st.dev_eps(0, 0) -= S(0.5) * st.tr_eps;
  st.dev_eps(1, 1) -= S(0.5) * st.tr_eps;
  const S q = st.dev_eps.squaredNorm() + S(4) * st.tr_eps * st.tr_eps;
  // exact delta_min at zero strain, no sqrt round-off
  using std::sqrt;
  st.delta = q == S(0) ? delta_min : sqrt(q + delta_min * delta_min);
  return st;
}

template <typename S>
S ice_strength(S A, S H, const PhysParamsT<S>& p) {
  if (!(A >= S(0) && A <= S(1)))
    throw std::invalid_argument("ice_strength: concentration outside [0,1]");
  if (!(H >= S(0))) throw std::invalid_argument("ice_strength: negative height");
  using std::exp;
  return p.P_star * H * exp(-p.C_conc * (S(1) - A));
}

template <typename S>
Eigen::Matrix<S, 2, 2> stress(const StrainStateT<S>& st, S P, int trace_factor = 2) {
  Eigen::Matrix<S, 2, 2> sigma =
      (st.dev_eps + S(trace_factor) * st.tr_eps * Eigen::Matrix<S, 2, 2>::Identity()) /
      st.delta;
  sigma -= Eigen::Matrix<S, 2, 2>::Identity();
  return (P / S(2)) * sigma;
}

template <typename S>
S jac_delta_inv(const StrainStateT<S>& su, const StrainStateT<S>& sv) {
  const S num = su.dev_eps.cwiseProduct(sv.dev_eps).sum() + S(4) * su.tr_eps * sv.tr_eps;
  return -num / (su.delta * su.delta * su.delta);
}

template <typename S>
Eigen::Matrix<S, 2, 2> jac_stress(const StrainStateT<S>& su, const StrainStateT<S>& sv,
                                  S P, int trace_factor = 2) {
  const Eigen::Matrix<S, 2, 2> I = Eigen::Matrix<S, 2, 2>::Identity();
  const Eigen::Matrix<S, 2, 2> tu = su.dev_eps + S(trace_factor) * su.tr_eps * I;
  const Eigen::Matrix<S, 2, 2> tv = sv.dev_eps + S(trace_factor) * sv.tr_eps * I;
  return (P / S(2)) * (tv / su.delta + jac_delta_inv(su, sv) * tu);
}

template <typename S>
Eigen::Matrix<S, 2, 1> force(const Eigen::Matrix<S, 2, 1>& u,
                             const Eigen::Matrix<S, 2, 1>& v_a,
                             const Eigen::Matrix<S, 2, 1>& v_o,
                             const PhysParamsT<S>& p) {
  const Eigen::Matrix<S, 2, 1> rel = v_o - u;
  return p.f_c * perp<S>(u - v_o) - p.rho_a * p.C_a * v_a.norm() * v_a -
         p.rho_o * p.C_o * rel.norm() * rel;
}

// d/du of force() in direction w; the 1/||v_o - u|| factor is regularized so
// Gauss-Newton keeps a usable descent direction at u = v_o.
template <typename S>
Eigen::Matrix<S, 2, 1> jac_force(const Eigen::Matrix<S, 2, 1>& u,
                                 const Eigen::Matrix<S, 2, 1>& v_o,
                                 const Eigen::Matrix<S, 2, 1>& w,
                                 const PhysParamsT<S>& p) {
  const Eigen::Matrix<S, 2, 1> rel = v_o - u;
  const S nrel = rel.norm();
  const S reg = nrel > S(1e-8) ? nrel : S(1e-8);
  return p.f_c * perp<S>(w) + p.rho_o * p.C_o * (nrel * w + (rel.dot(w) / reg) * rel);
}

// Row-major [m00 m01 m10 m11]; dot of two flattened tensors is the Frobenius
// inner product the LS functional integrates.
template <typename S>
Eigen::Matrix<S, 4, 1> flatten(const Eigen::Matrix<S, 2, 2>& m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

template <typename S>
Eigen::Matrix<S, 2, 2> unflatten(const Eigen::Matrix<S, 4, 1>& v) {
  Eigen::Matrix<S, 2, 2> m;
  m << v(0), v(1), v(2), v(3);
  return m;
}

}  // namespace icefem
