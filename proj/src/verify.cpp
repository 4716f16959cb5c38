#include "icefem/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "icefem/constitutive.hpp"
#include "icefem/fields.hpp"
#include "icefem/momentum.hpp"

namespace icefem {
namespace {

using ld = long double;
using Mat2ld = Eigen::Matrix<ld, 2, 2>;
using Vec2ld = Eigen::Matrix<ld, 2, 1>;
using VecXld = Eigen::Matrix<ld, Eigen::Dynamic, 1>;

constexpr std::array<double, 4> kSteps = {1e-3, 1e-4, 1e-5, 1e-6};
constexpr int kAt1em5 = 2;  // index of h = 1e-5 in kSteps

// One central-difference sweep: relative errors against the analytic
// directional derivative plus, per step, the cancellation noise floor
// eps * |f| / (2h) that the difference quotient cannot beat.
struct FdProbe {
  std::array<double, 4> errs{};
  std::array<double, 4> noise{};
};

template <typename Value, typename Fn, typename Dist, typename Norm>
FdProbe fd_probe(const Fn& fn, const Value& analytic, double analytic_norm,
                 const Dist& dist, const Norm& norm) {
  const double denom = std::max(analytic_norm, 1e-300);
  const double eps = static_cast<double>(std::numeric_limits<ld>::epsilon());
  FdProbe p;
  for (size_t i = 0; i < kSteps.size(); ++i) {
    const ld h = kSteps[i];
    const Value fp = fn(h), fm = fn(-h);
    p.errs[i] = dist(Value((fp - fm) / (2.0L * h)), analytic) / denom;
    p.noise[i] =
        eps * std::max(norm(fp), norm(fm)) / (2.0 * kSteps[i]) / denom;
  }
  return p;
}

// LSQ slope of log err against log h, ignoring steps whose error sits at the
// rounding floor (within 30x of the noise estimate).  Truncation-dominated
// points are what the order-2 theory speaks about; if fewer than two such
// points exist the full sweep is used and the slope comes out junk, which
// fails the order bound loudly.
double fit_order(const FdProbe& p) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int pass = 0; pass < 2 && n < 2; ++pass) {
    sx = sy = sxx = sxy = 0;
    n = 0;
    for (size_t i = 0; i < kSteps.size(); ++i) {
      if (pass == 0 && p.errs[i] < 30.0 * p.noise[i]) continue;
      const double x = std::log(kSteps[i]);
      const double y = std::log(std::max(p.errs[i], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// A random direction can make the leading truncation term nearly vanish, in
// which case the whole sweep sits at the rounding floor and no order can be
// read off.  Such a state passes by direct agreement instead: every step must
// match to 1e-10, five orders tighter than the h=1e-5 acceptance bound (a
// wrong derivative would plateau at the size of its defect).  The caller
// draws replacement states so the order statistic still covers n_states.
struct Aggregate {
  static constexpr double kAgreementFloor = 1e-10;
  double min_order = 1e300;
  double max_rel = 0;
  int measured = 0;
  int floored = 0;
  void add(const FdProbe& p, double rel_at_1em5) {
    max_rel = std::max(max_rel, rel_at_1em5);
    int clean = 0;
    for (size_t i = 0; i < kSteps.size(); ++i)
      clean += p.errs[i] >= 30.0 * p.noise[i];
    if (clean < 2 &&
        *std::max_element(p.errs.begin(), p.errs.end()) <= kAgreementFloor) {
      ++floored;
      return;
    }
    min_order = std::min(min_order, fit_order(p));
    ++measured;
  }
  void add(const FdProbe& p) { add(p, p.errs[kAt1em5]); }
  void report(VerifyReport& rep, const std::string& name, int n_states) const {
    std::ostringstream note;
    note << "min LSQ slope over " << measured
         << " truncation-resolved states, h in {1e-3..1e-6}";
    if (floored)
      note << "; " << floored << " at agreement floor (<= 1e-10 at all h)";
    if (measured < n_states) note << "; NEEDED " << n_states;
    rep.checks.push_back({name + " fd order",
                          measured >= n_states && min_order >= 1.9,
                          measured ? min_order : 0.0, 1.9, note.str()});
    rep.checks.push_back({name + " fd rel err at h=1e-5", max_rel <= 1e-5, max_rel,
                          1e-5, "max over states"});
  }
};

double regime(int state) {
  constexpr double r[3] = {1.0, 1e-3, 1e-9};
  return r[state % 3];
}

const auto mat_norm = [](const Mat2ld& a) { return static_cast<double>(a.norm()); };
const auto vec_norm = [](const Vec2ld& a) { return static_cast<double>(a.norm()); };
const auto sca_norm = [](ld a) { return static_cast<double>(std::abs(a)); };

}  // namespace

VerifyReport verify_derivatives(unsigned seed, int n_states) {
  VerifyReport rep;
  rep.suite = "derivatives";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> uA(0.3, 1.0);
  std::uniform_real_distribution<double> uH(0.05, 0.5);
  const PhysParams prm;
  const PhysParamsT<ld> prml = prm.cast<ld>();

  auto rand_mat = [&](double s) {
    Eigen::Matrix2d m;
    m << uni(rng), uni(rng), uni(rng), uni(rng);
    return Eigen::Matrix2d(s * m);
  };
  auto rand_vec = [&](double s) {
    return Eigen::Vector2d(s * uni(rng), s * uni(rng));
  };

  const auto mat_dist = [](const Mat2ld& a, const Mat2ld& b) {
    return static_cast<double>((a - b).norm());
  };
  const auto vec_dist = [](const Vec2ld& a, const Vec2ld& b) {
    return static_cast<double>((a - b).norm());
  };
  const auto sca_dist = [](ld a, ld b) { return static_cast<double>(std::abs(a - b)); };

  Aggregate agg_dinv, agg_jc, agg_jf, agg_b;
  double max_fv_mismatch = 0;

  for (int k = 0; agg_dinv.measured < n_states && k < 4 * n_states; ++k) {
    const double s = regime(k);
    const Eigen::Matrix2d G = rand_mat(s), D = rand_mat(s);
    const Mat2ld Gl = G.cast<ld>(), Dl = D.cast<ld>();
    const StrainState su = strain(G, prm.delta_min);
    const StrainState sv = strain(D, prm.delta_min);
    const ld analytic = ld(jac_delta_inv(su, sv));
    auto fn = [&](ld h) {
      return 1.0L / strain<ld>(Gl + h * Dl, prml.delta_min).delta;
    };
    agg_dinv.add(fd_probe(fn, analytic, std::abs(double(analytic)), sca_dist,
                          sca_norm));
  }

  for (int k = 0; agg_jc.measured < n_states && k < 4 * n_states; ++k) {
    const double s = regime(k);
    const Eigen::Matrix2d G = rand_mat(s), D = rand_mat(s);
    const Mat2ld Gl = G.cast<ld>(), Dl = D.cast<ld>();
    const int tf = (k % 2) ? 1 : 2;
    const double P = ice_strength(uA(rng), uH(rng), prm);
    const StrainState su = strain(G, prm.delta_min);
    const StrainState sv = strain(D, prm.delta_min);
    const Mat2ld analytic = jac_stress(su, sv, P, tf).cast<ld>();
    auto fn = [&](ld h) -> Mat2ld {
      return stress<ld>(strain<ld>(Gl + h * Dl, prml.delta_min), ld(P), tf);
    };
    agg_jc.add(fd_probe(fn, analytic, double(analytic.norm()), mat_dist,
                        mat_norm));
  }

  for (int k = 0; agg_jf.measured < n_states && k < 4 * n_states; ++k) {
    // coherent velocity scale per state; stay clear of the jac_force
    // regularization region ||v_o - u|| <= 1e-8 where the analytic
    // jacobian intentionally differs from the true derivative
    constexpr double vr[3] = {1.0, 1e-3, 1e-5};
    const double vs = vr[k % 3];
    const Eigen::Vector2d va = rand_vec(vs), vo = rand_vec(vs);
    Eigen::Vector2d u = rand_vec(vs);
    while ((vo - u).norm() < std::max(1e-7, 1e-3 * vs)) u = rand_vec(vs);
    const Eigen::Vector2d w = rand_vec(vs);
    const Vec2ld analytic = jac_force(u, vo, w, prm).cast<ld>();
    const Vec2ld ul = u.cast<ld>(), val = va.cast<ld>(), vol = vo.cast<ld>(),
                 wl = w.cast<ld>();
    auto fn = [&](ld h) -> Vec2ld {
      return force<ld>(ul + h * wl, val, vol, prml);
    };
    agg_jf.add(fd_probe(fn, analytic, double(analytic.norm()), vec_dist,
                        vec_norm));
  }

  // assembled first variation on a small mesh, all boundary rows kept
  {
    const Mesh mesh = build_structured(2);
    const DofMap dms = build_dofmap(mesh, {Family::RavThomas, 0, 2});
    const DofMap dmu = build_dofmap(mesh, {Family::Lagrange, 1, 2});
    const DofMap dmt = build_dofmap(mesh, {Family::Lagrange, 1, 1});
    Eigen::VectorXd A(dmt.n_global), H(dmt.n_global);

    MomentumProblem pb;
    pb.mesh = &mesh;
    pb.dm_sigma = &dms;
    pb.dm_u = &dmu;
    pb.dm_tracer = &dmt;
    pb.A1 = &A;
    pb.H1 = &H;
    pb.dt = 1800.0;
    pb.params = prm;

    const Eigen::Matrix2d Wg = rand_mat(3.0), Og = rand_mat(0.01);
    const Eigen::Vector2d W0 = rand_vec(5.0), O0 = rand_vec(0.01);
    pb.ext.wind = [=](const Eigen::Vector2d& x) {
      return Eigen::Vector2d(W0 + Wg * x);
    };
    pb.ext.ocean = [=](const Eigen::Vector2d& x) {
      return Eigen::Vector2d(O0 + Og * x);
    };

    auto rand_coeffs = [&](int n, double sc) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = sc * uni(rng);
      return v;
    };

    for (int k = 0; agg_b.measured < n_states && k < 2 * n_states; ++k) {
      const double s = regime(k);
      for (int i = 0; i < A.size(); ++i) A[i] = uA(rng);
      for (int i = 0; i < H.size(); ++i) H[i] = uH(rng);
      MomentumState st;
      st.sigma = rand_coeffs(dms.n_global, s * 1e3);
      st.u = rand_coeffs(dmu.n_global, s);
      pb.state_n.sigma = rand_coeffs(dms.n_global, s * 1e3);
      pb.state_n.u = rand_coeffs(dmu.n_global, s);
      const Eigen::VectorXd ys = rand_coeffs(dms.n_global, s * 1e3);
      const Eigen::VectorXd yu = rand_coeffs(dmu.n_global, s);

      const SparseSystem sys = assemble_gn_system(pb, st, false);
      const double B = -2.0 * (sys.b.head(dms.n_global).dot(ys) +
                               sys.b.tail(dmu.n_global).dot(yu));

      const double fv = first_variation_t<double>(pb, st.sigma, st.u, ys, yu);
      max_fv_mismatch = std::max(
          max_fv_mismatch, std::abs(fv - B) / std::max(std::abs(B), 1e-300));

      const VecXld sl = st.sigma.cast<ld>(), ul = st.u.cast<ld>();
      const VecXld ysl = ys.cast<ld>(), yul = yu.cast<ld>();
      auto fn = [&](ld h) {
        return functional_value_t<ld>(pb, VecXld(sl + h * ysl), VecXld(ul + h * yul));
      };
      // the order fit needs a reference below the double-assembly floor; the
      // pairing check below pins that reference to the assembled B
      const ld fv_ld = first_variation_t<ld>(pb, sl, ul, ysl, yul);
      const ld h5 = kSteps[kAt1em5];
      const double fd5 = double((fn(h5) - fn(-h5)) / (2.0L * h5));
      agg_b.add(fd_probe(fn, fv_ld, std::abs(double(fv_ld)), sca_dist, sca_norm),
                std::abs(fd5 - B) / std::max(std::abs(B), 1e-300));
    }
  }

  agg_dinv.report(rep, "jac_delta_inv", n_states);
  agg_jc.report(rep, "jac_stress", n_states);
  agg_jf.report(rep, "jac_force", n_states);
  agg_b.report(rep, "first variation B", n_states);
  rep.checks.push_back({"B vs direct quadrature pairing", max_fv_mismatch <= 1e-10,
                        max_fv_mismatch, 1e-10,
                        "assembled -2 b.y against first_variation_t"});
  return rep;
}

namespace {

Eigen::Vector2d manufactured_u(const Eigen::Vector2d& x) {
  const double pi = M_PI;
  return {std::sin(pi * x.x()) * std::sin(pi * x.y()),
          std::sin(pi * x.x()) * std::sin(2 * pi * x.y())};
}

Eigen::Vector2d manufactured_div_eps(const Eigen::Vector2d& x) {
  const double pi = M_PI, p2 = pi * pi;
  const double sx = std::sin(pi * x.x()), cx = std::cos(pi * x.x());
  const double sy = std::sin(pi * x.y()), cy = std::cos(pi * x.y());
  const double s2y = std::sin(2 * pi * x.y()), c2y = std::cos(2 * pi * x.y());
  return {-1.5 * p2 * sx * sy + p2 * cx * c2y,
          0.5 * p2 * cx * cy - 4.5 * p2 * sx * s2y};
}

}  // namespace

VerifyReport verify_convergence() {
  VerifyReport rep;
  rep.suite = "convergence";
  const std::array<int, 4> ns = {4, 8, 16, 32};
  std::array<double, 4> errs{};
  std::ostringstream note;

  for (size_t i = 0; i < ns.size(); ++i) {
    const Mesh mesh = build_structured(ns[i]);
    const DofMap dms = build_dofmap(mesh, {Family::RavThomas, 0, 2});
    const DofMap dmu = build_dofmap(mesh, {Family::Lagrange, 1, 2});
    const DofMap dmt = build_dofmap(mesh, {Family::Lagrange, 1, 1});
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(dmt.n_global);

    MomentumProblem pb;
    pb.mesh = &mesh;
    pb.dm_sigma = &dms;
    pb.dm_u = &dmu;
    pb.dm_tracer = &dmt;
    pb.A1 = &ones;
    pb.H1 = &ones;
    pb.dt = 1.0;
    pb.params.rho_ice = 1.0;
    pb.opts.theta = 1.0;
    pb.opts.law = ConstitutiveLaw::Linear;
    pb.opts.force_mode = ForceMode::None;
    pb.opts.max_iter = 5;
    pb.ext.source = [](const Eigen::Vector2d& x) {
      return Eigen::Vector2d(manufactured_u(x) - manufactured_div_eps(x));
    };
    pb.state_n.sigma = Eigen::VectorXd::Zero(dms.n_global);
    pb.state_n.u = Eigen::VectorXd::Zero(dmu.n_global);

    auto [sol, report] = gn_solve(pb, pb.state_n);
    errs[i] = l2_error_lagrange(mesh, dmu, sol.u, 1.0, 6, [](const Eigen::Vector2d& x) {
      return Eigen::VectorXd(manufactured_u(x));
    });
    note << "n=" << ns[i] << " err=" << errs[i] << " (" << report.stop_reason
         << ") ";
    if (!report.converged) {
      rep.checks.push_back({"surrogate solve n=" + std::to_string(ns[i]), false, 0,
                            0, "gn_solve did not converge: " + report.stop_reason});
    }
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(1.0 / ns[i]);
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = ns.size();
  const double rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.checks.push_back(
      {"u L2 convergence rate (RT0/P1)", rate >= 0.9, rate, 0.9, note.str()});
  return rep;
}

namespace {

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// exact integral of x^p y^q over the reference triangle
double monomial_integral(int p, int q) {
  return factorial(p) * factorial(q) / factorial(p + q + 2);
}

}  // namespace

VerifyReport verify_elements() {
  VerifyReport rep;
  rep.suite = "elements";

  {
    double worst = 0;
    for (int order = 1; order <= 6; ++order) {
      const QuadRule rule = quadrature(order);
      for (int p = 0; p + 0 <= rule.degree; ++p)
        for (int q = 0; p + q <= rule.degree; ++q) {
          double val = 0;
          for (int i = 0; i < rule.size(); ++i)
            val += rule.weights[i] * std::pow(rule.points(i, 0), p) *
                   std::pow(rule.points(i, 1), q);
          worst = std::max(worst, std::abs(val - monomial_integral(p, q)));
        }
    }
    rep.checks.push_back({"triangle quadrature exactness", worst <= 1e-13, worst,
                          1e-13, "monomials up to each rule degree"});
  }

  {
    double worst = 0;
    for (int npts = 1; npts <= 5; ++npts) {
      const SegmentRule rule = segment_quadrature(npts);
      for (int k = 0; k <= 2 * npts - 1; ++k) {
        double val = 0;
        for (int i = 0; i < rule.points.size(); ++i)
          val += rule.weights[i] * std::pow(rule.points[i], k);
        worst = std::max(worst, std::abs(val - 1.0 / (k + 1)));
      }
    }
    rep.checks.push_back({"segment quadrature exactness", worst <= 1e-13, worst,
                          1e-13, "monomials up to 2m-1 on [0,1]"});
  }

  {
    const Eigen::Vector2d nodes1[3] = {{0, 0}, {1, 0}, {0, 1}};
    const Eigen::Vector2d nodes2[6] = {{0, 0},     {1, 0},     {0, 1},
                                       {0.5, 0.5}, {0, 0.5},   {0.5, 0}};
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const LagrangeBasis b = eval_lagrange(1, nodes1[i]);
      for (int j = 0; j < 3; ++j)
        worst = std::max(worst, std::abs(b.values[j] - (i == j ? 1.0 : 0.0)));
    }
    for (int i = 0; i < 6; ++i) {
      const LagrangeBasis b = eval_lagrange(2, nodes2[i]);
      for (int j = 0; j < 6; ++j)
        worst = std::max(worst, std::abs(b.values[j] - (i == j ? 1.0 : 0.0)));
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.05, 0.4);
    for (int k = 0; k < 20; ++k) {
      const Eigen::Vector2d p(uni(rng), uni(rng));
      for (int deg : {1, 2}) {
        const LagrangeBasis b = eval_lagrange(deg, p);
        worst = std::max(worst, std::abs(b.values.sum() - 1.0));
        worst = std::max(worst, b.gradients.colwise().sum().norm());
      }
    }
    rep.checks.push_back({"lagrange nodal duality + partition of unity",
                          worst <= 1e-13, worst, 1e-13, "P1 and P2"});
  }

  // dof duality recomputed with finer rules than the construction used
  const SegmentRule seg = segment_quadrature(5);
  const QuadRule area = quadrature(4);
  for (int deg : {0, 1}) {
    const int nd = rt_ndofs(deg);
    Eigen::MatrixXd duality = Eigen::MatrixXd::Zero(nd, nd);
    for (int e = 0; e < 3; ++e) {
      const Eigen::Vector2d n = ref_edge_normal(e);
      const double len = ref_edge_length(e);
      for (int q = 0; q < seg.points.size(); ++q) {
        const double s = seg.points[q];
        const double w = seg.weights[q] * len;
        const RtBasis b = eval_rt(deg, ref_edge_point(e, s));
        const Eigen::VectorXd flux = b.values * n;
        if (deg == 0) {
          duality.row(e) += w * flux.transpose();
        } else {
          duality.row(2 * e + 0) += w * flux.transpose();
          duality.row(2 * e + 1) += w * (2 * s - 1) * flux.transpose();
        }
      }
    }
    if (deg == 1) {
      for (int q = 0; q < area.size(); ++q) {
        const RtBasis b = eval_rt(1, area.points.row(q).transpose());
        duality.row(6) += area.weights[q] * b.values.col(0).transpose();
        duality.row(7) += area.weights[q] * b.values.col(1).transpose();
      }
    }
    const double worst =
        (duality - Eigen::MatrixXd::Identity(nd, nd)).cwiseAbs().maxCoeff();
    rep.checks.push_back({"rt" + std::to_string(deg) + " dof duality",
                          worst <= 1e-12, worst, 1e-12,
                          "independent 5-pt edge / order-4 area rules"});
  }

  for (int deg : {0, 1}) {
    const int nd = rt_ndofs(deg);
    Eigen::VectorXd div_int = Eigen::VectorXd::Zero(nd);
    for (int q = 0; q < area.size(); ++q) {
      const RtBasis b = eval_rt(deg, area.points.row(q).transpose());
      div_int += area.weights[q] * b.divergences;
    }
    Eigen::VectorXd flux_sum = Eigen::VectorXd::Zero(nd);
    for (int e = 0; e < 3; ++e) {
      const Eigen::Vector2d n = ref_edge_normal(e);
      const double len = ref_edge_length(e);
      for (int q = 0; q < seg.points.size(); ++q) {
        const RtBasis b = eval_rt(deg, ref_edge_point(e, seg.points[q]));
        flux_sum += seg.weights[q] * len * (b.values * n);
      }
    }
    const double worst = (div_int - flux_sum).cwiseAbs().maxCoeff();
    rep.checks.push_back({"rt" + std::to_string(deg) + " divergence theorem",
                          worst <= 1e-12, worst, 1e-12,
                          "per basis function on the reference element"});
  }

  for (int deg : {0, 1}) {
    const Mesh mesh = build_structured(4);
    const DofMap dm = build_dofmap(mesh, {Family::RavThomas, deg, 1});
    std::mt19937_64 rng(11 + deg);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::VectorXd coeffs(dm.n_global);
    for (int i = 0; i < coeffs.size(); ++i) coeffs[i] = uni(rng);

    std::map<int, std::vector<int>> edge_tris;
    for (int t = 0; t < mesh.n_triangles(); ++t)
      for (int le = 0; le < 3; ++le) edge_tris[mesh.tri_edges[t][le]].push_back(t);

    double worst = 0;
    for (const auto& [e, tris] : edge_tris) {
      if (tris.size() != 2) continue;
      const Eigen::Vector2d xa = mesh.vertices[mesh.edges[e][0]];
      const Eigen::Vector2d xb = mesh.vertices[mesh.edges[e][1]];
      const Eigen::Vector2d d = xb - xa;
      const Eigen::Vector2d n = Eigen::Vector2d(d.y(), -d.x()).normalized();
      for (double s : {0.15, 0.5, 0.85}) {
        const Eigen::Vector2d p = (1 - s) * xa + s * xb;
        double trace[2];
        for (int k = 0; k < 2; ++k) {
          const GeometryMap geom = geometry_map(mesh, tris[k], 1.0);
          const Eigen::Vector2d ref = geom.Jinv * (p - geom.origin);
          trace[k] = eval_rt_value(dm, coeffs, tris[k], ref, geom).row(0).dot(n);
        }
        worst = std::max(worst, std::abs(trace[0] - trace[1]));
      }
    }
    rep.checks.push_back({"rt" + std::to_string(deg) + " piola normal continuity",
                          worst <= 1e-12, worst, 1e-12,
                          "random coefficients, interior edges, n=4 mesh"});
  }

  return rep;
}

std::string format_report(const VerifyReport& rep) {
  std::ostringstream out;
  out << "suite: " << rep.suite << "\n";
  for (const auto& c : rep.checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g (bound %.3g)", c.value, c.threshold);
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << buf;
    if (!c.note.empty()) out << "  -- " << c.note;
    out << "\n";
  }
  out << (rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace icefem
