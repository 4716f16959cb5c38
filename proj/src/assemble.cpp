#include "icefem/assemble.hpp"

#include <stdexcept>

#include "icefem/reference_element.hpp"

namespace icefem {

namespace {

struct RefTables {
  // per quadrature point
  std::vector<LagrangeBasis> lagrange;
  std::vector<RtBasis> rt;
};

RefTables make_ref_tables(const FeSpace& space, const QuadRule& rule) {
  RefTables tab;
  for (int q = 0; q < rule.size(); ++q) {
    const Eigen::Vector2d p = rule.points.row(q).transpose();
    if (space.family == Family::Lagrange)
      tab.lagrange.push_back(eval_lagrange(space.degree, p));
    else
      tab.rt.push_back(eval_rt(space.degree, p));
  }
  return tab;
}

}  // namespace

SparseSystem assemble_ls(const Mesh& mesh, double scale,
                         const std::vector<LsBlock>& blocks, int n_rows,
                         int quad_order, const LsIntegrand& integrand,
                         const std::vector<int>* tri_subset) {
  const QuadRule rule = quadrature(quad_order);
  const int nb = static_cast<int>(blocks.size());
  if (nb == 0) throw std::invalid_argument("assemble_ls: no blocks");

  std::vector<RefTables> tables;
  int n_cols = 0, n_total = 0;
  for (const auto& blk : blocks) {
    tables.push_back(make_ref_tables(blk.dofmap->space, rule));
    n_cols += blk.dofmap->n_local;
    n_total = std::max(n_total, blk.offset + blk.dofmap->n_global);
  }

  std::vector<int> all_tris;
  if (!tri_subset) {
    all_tris.resize(mesh.n_triangles());
    for (int t = 0; t < mesh.n_triangles(); ++t) all_tris[t] = t;
    tri_subset = &all_tris;
  }

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(tri_subset->size() * static_cast<size_t>(n_cols) * n_cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_total);

  std::vector<BasisAtPoint> basis(nb);
  Eigen::MatrixXd L(n_rows, n_cols), Ke(n_cols, n_cols);
  Eigen::VectorXd r(n_rows), be(n_cols);
  std::vector<int> cols(n_cols);

  for (int t : *tri_subset) {
    const GeometryMap geom = geometry_map(mesh, t, scale);
    int c0 = 0;
    for (int b = 0; b < nb; ++b) {
      const auto& gids = blocks[b].dofmap->tri_gids[t];
      for (size_t i = 0; i < gids.size(); ++i)
        cols[c0 + static_cast<int>(i)] = blocks[b].offset + gids[i];
      c0 += blocks[b].dofmap->n_local;
    }

    Ke.setZero();
    be.setZero();
    for (int q = 0; q < rule.size(); ++q) {
      for (int b = 0; b < nb; ++b) {
        const FeSpace& sp = blocks[b].dofmap->space;
        if (sp.family == Family::Lagrange) {
          const LagrangeBasis& ref = tables[b].lagrange[q];
          basis[b].values = ref.values;
          basis[b].grads = ref.gradients * geom.Jinv;
        } else {
          const RtBasis& ref = tables[b].rt[q];
          basis[b].vecs = ref.values * geom.J.transpose() / geom.detJ;
          basis[b].divs = ref.divergences / geom.detJ;
          const auto& signs = blocks[b].dofmap->tri_signs[t];
          for (int i = 0; i < blocks[b].dofmap->n_local_scalar; ++i) {
            basis[b].vecs.row(i) *= signs[i];
            basis[b].divs[i] *= signs[i];
          }
        }
      }
      QuadPointCtx ctx;
      ctx.tri = t;
      ctx.ref = rule.points.row(q).transpose();
      ctx.x = geom.to_physical(ctx.ref);
      ctx.weight = rule.weights[q] * geom.detJ;
      ctx.geom = &geom;
      ctx.basis = &basis;

      L.setZero();
      r.setZero();
      integrand(ctx, L, r);
      Ke.noalias() += ctx.weight * L.transpose() * L;
      be.noalias() -= ctx.weight * L.transpose() * r;
    }

    for (int i = 0; i < n_cols; ++i) {
      rhs[cols[i]] += be[i];
      for (int j = 0; j < n_cols; ++j) trips.emplace_back(cols[i], cols[j], Ke(i, j));
    }
  }

  SparseSystem sys;
  sys.A.resize(n_total, n_total);
  sys.A.setFromTriplets(trips.begin(), trips.end());
  sys.b = rhs;
  return sys;
}

double integrate(const Mesh& mesh, double scale, int quad_order,
                 const std::function<double(int, const Eigen::Vector2d&,
                                            const Eigen::Vector2d&)>& f) {
  const QuadRule rule = quadrature(quad_order);
  double sum = 0;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const GeometryMap geom = geometry_map(mesh, t, scale);
    for (int q = 0; q < rule.size(); ++q) {
      const Eigen::Vector2d ref = rule.points.row(q).transpose();
      sum += rule.weights[q] * geom.detJ * f(t, ref, geom.to_physical(ref));
    }
  }
  return sum;
}

}  // namespace icefem
