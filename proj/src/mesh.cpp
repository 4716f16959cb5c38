#include "icefem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace icefem {

namespace {

Eigen::Vector2d rot_minus90(const Eigen::Vector2d& v) { return {v.y(), -v.x()}; }

double signed_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                   const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = b - a, v = c - a;
  return 0.5 * (u.x() * v.y() - u.y() * v.x());
}

}  // namespace

int Mesh::n_boundary_edges() const {
  return static_cast<int>(std::count(boundary_edge.begin(), boundary_edge.end(), char(1)));
}

double Mesh::tri_area(int t) const {
  const auto& tri = triangles[t];
  return signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

Mesh build_mesh(std::vector<Eigen::Vector2d> vertices,
                std::vector<std::array<int, 3>> triangles) {
  Mesh m;
  m.vertices = std::move(vertices);
  m.triangles = std::move(triangles);
  const int nv = m.n_vertices();

  for (int t = 0; t < m.n_triangles(); ++t) {
    for (int k : m.triangles[t])
      if (k < 0 || k >= nv)
        throw std::invalid_argument("build_mesh: vertex index out of range in triangle " +
                                    std::to_string(t));
    if (m.tri_area(t) <= 0.0)
      throw std::invalid_argument("build_mesh: non-positive area in triangle " +
                                  std::to_string(t));
  }

  std::map<std::pair<int, int>, int> edge_id;
  std::vector<int> adjacency_count;
  m.tri_edges.resize(m.triangles.size());
  m.tri_edge_sign.resize(m.triangles.size());

  for (int t = 0; t < m.n_triangles(); ++t) {
    const auto& tri = m.triangles[t];
    for (int le = 0; le < 3; ++le) {
      const auto [la, lb] = Mesh::local_edges()[le];
      const int a = tri[la], b = tri[lb];
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] = edge_id.try_emplace(key, static_cast<int>(m.edges.size()));
      if (inserted) {
        m.edges.push_back({key.first, key.second});
        adjacency_count.push_back(0);
      }
      const int e = it->second;
      if (++adjacency_count[e] > 2)
        throw std::invalid_argument("build_mesh: edge shared by more than two triangles");
      m.tri_edges[t][le] = e;

      // Outward normal of this triangle on the edge vs. the global normal.
      const Eigen::Vector2d lo = m.vertices[key.first], hi = m.vertices[key.second];
      const Eigen::Vector2d n_global = rot_minus90(hi - lo);
      const Eigen::Vector2d mid = 0.5 * (m.vertices[a] + m.vertices[b]);
      const Eigen::Vector2d opp = m.vertices[tri[le]];
      Eigen::Vector2d n_out = rot_minus90(m.vertices[b] - m.vertices[a]);
      if (n_out.dot(mid - opp) < 0) n_out = -n_out;
      m.tri_edge_sign[t][le] = n_out.dot(n_global) > 0 ? 1 : -1;
    }
  }

  m.boundary_edge.assign(m.edges.size(), 0);
  m.boundary_vertex.assign(nv, 0);
  for (int e = 0; e < m.n_edges(); ++e) {
    if (adjacency_count[e] == 1) {
      m.boundary_edge[e] = 1;
      m.boundary_vertex[m.edges[e][0]] = 1;
      m.boundary_vertex[m.edges[e][1]] = 1;
    }
  }
  return m;
}

Mesh build_structured(int n) {
  if (n < 1) throw std::invalid_argument("build_structured: n must be >= 1");
  std::vector<Eigen::Vector2d> verts;
  verts.reserve((n + 1) * (n + 1));
  const double h = 1.0 / n;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) verts.emplace_back(i * h, j * h);

  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::array<int, 3>> tris;
  tris.reserve(2 * n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      tris.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  return build_mesh(std::move(verts), std::move(tris));
}

MeshQuality mesh_quality(const Mesh& mesh) {
  MeshQuality q;
  q.min_angle_deg = 180.0;
  q.max_aspect = 0.0;
  q.min_area = std::numeric_limits<double>::max();

  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const double area = mesh.tri_area(t);
    q.min_area = std::min(q.min_area, area);
    if (!(area > 0)) {
      q.issues.push_back("triangle " + std::to_string(t) + " has non-positive area");
      continue;
    }
    double max_edge = 0, min_alt = std::numeric_limits<double>::max();
    for (int k = 0; k < 3; ++k) {
      const Eigen::Vector2d a = mesh.vertices[tri[k]];
      const Eigen::Vector2d u = mesh.vertices[tri[(k + 1) % 3]] - a;
      const Eigen::Vector2d v = mesh.vertices[tri[(k + 2) % 3]] - a;
      const double angle =
          std::atan2(std::abs(u.x() * v.y() - u.y() * v.x()), u.dot(v)) * 180.0 /
          std::numbers::pi;
      q.min_angle_deg = std::min(q.min_angle_deg, angle);
      const double elen = (mesh.vertices[tri[(k + 2) % 3]] - mesh.vertices[tri[(k + 1) % 3]]).norm();
      max_edge = std::max(max_edge, elen);
      min_alt = std::min(min_alt, 2.0 * area / elen);
    }
    q.max_aspect = std::max(q.max_aspect, max_edge / min_alt);
  }
  if (mesh.n_triangles() == 0) q.issues.push_back("mesh has no triangles");
  q.ok = q.issues.empty();
  return q;
}

}  // namespace icefem
