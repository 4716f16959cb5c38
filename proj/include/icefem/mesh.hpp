#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace icefem {

/// Conforming triangulation of the (rescaled) unit square.
///
/// Triangles are counterclockwise. Each edge stores its vertex pair sorted
/// ascending; the global edge normal is the tangent lo->hi rotated by -90
/// degrees. tri_edge_sign records whether a triangle's outward normal on a
/// local edge agrees (+1) or disagrees (-1) with the global normal. Interior
/// edges are seen with opposite signs from their two triangles, which is what
/// makes edge-based normal fluxes single-valued.
struct Mesh {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> edges;
  std::vector<char> boundary_edge;
  std::vector<char> boundary_vertex;
  std::vector<std::array<int, 3>> tri_edges;      // local edge i is opposite vertex i
  std::vector<std::array<int, 3>> tri_edge_sign;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_boundary_edges() const;

  double tri_area(int t) const;

  /// Local edges in (lo,hi) local-index order: (1,2), (0,2), (0,1).
  static std::array<std::array<int, 2>, 3> local_edges() { return {{{1, 2}, {0, 2}, {0, 1}}}; }
};

/// Computes connectivity from raw vertices + triangles. Throws on
/// non-positive triangle area, out-of-range indices, or an edge shared by
/// more than two triangles.
Mesh build_mesh(std::vector<Eigen::Vector2d> vertices,
                std::vector<std::array<int, 3>> triangles);

/// Uniform n x n grid of unit-square cells, each split along the
/// lower-left to upper-right diagonal: 2n^2 triangles, (n+1)^2 vertices.
Mesh build_structured(int n);

struct MeshQuality {
  double min_angle_deg = 0;
  double max_aspect = 0;  // longest edge over shortest altitude
  double min_area = 0;
  bool ok = false;
  std::vector<std::string> issues;
};

/// Validates geometry and reports shape measures. Degenerate triangles are
/// reported as issues rather than thrown, so tampered meshes can be checked.
MeshQuality mesh_quality(const Mesh& mesh);

}  // namespace icefem
