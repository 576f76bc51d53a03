#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "solvegeo/algebra.hpp"
#include "solvegeo/ode.hpp"

// Geodesic sphere meshes: push a latitude-longitude grid of unit directions
// through the exponential map at a fixed radius and assemble a watertight
// quad/tri mesh. The grid is axis-aligned so the reflection isometries act by
// index permutation.

namespace solvegeo {

struct DirectionGrid {
  int n_theta = 0;  // latitude subdivisions (rows are 1 .. n_theta-1)
  int n_phi = 0;    // longitude samples per row
  std::vector<Vec3> directions;  // [north, south, then rows]

  int vertex_count() const { return static_cast<int>(directions.size()); }
  // index of the (i, j) interior grid vertex, i in [1, n_theta-1], j in [0, n_phi)
  int index(int i, int j) const { return 2 + (i - 1) * n_phi + j; }
};

DirectionGrid make_latlong_grid(int n_theta, int n_phi);

struct SphereMesh {
  double alpha = 0.0;
  double radius = 0.0;
  int n_theta = 0, n_phi = 0;
  std::vector<GroupPoint> vertices;
  std::vector<std::array<int, 3>> tris;
  std::vector<std::array<int, 4>> quads;
  std::vector<int> failed_vertices;  // integration failures, mesh has holes

  bool complete() const { return failed_vertices.empty(); }
};

SphereMesh geodesic_sphere(Alpha alpha, double radius, const DirectionGrid& grid,
                           const IntegratorConfig& cfg = {}, int n_threads = 0);

// Wavefront OBJ: comment header, "v x y z" with 9 significant digits, then
// 1-based "f" lines; LF endings.
void export_obj(const SphereMesh& mesh, std::ostream& os);

}  // namespace solvegeo
