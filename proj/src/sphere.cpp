#include "solvegeo/sphere.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "solvegeo/flow.hpp"
#include "solvegeo/parallel.hpp"

namespace solvegeo {

DirectionGrid make_latlong_grid(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 3)
    throw std::domain_error("make_latlong_grid: need n_theta >= 2, n_phi >= 3");
  DirectionGrid g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  g.directions.reserve(2 + (n_theta - 1) * n_phi);
  g.directions.push_back({0.0, 0.0, 1.0});
  g.directions.push_back({0.0, 0.0, -1.0});
  for (int i = 1; i < n_theta; ++i) {
    const double theta = std::numbers::pi * i / n_theta;
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      g.directions.push_back({st * std::cos(phi), st * std::sin(phi), ct});
    }
  }
  return g;
}

SphereMesh geodesic_sphere(Alpha alpha, double radius, const DirectionGrid& grid,
                           const IntegratorConfig& cfg, int n_threads) {
  if (!(radius > 0.0)) throw std::domain_error("geodesic_sphere: radius must be > 0");
  SphereMesh mesh;
  mesh.alpha = alpha.value();
  mesh.radius = radius;
  mesh.n_theta = grid.n_theta;
  mesh.n_phi = grid.n_phi;
  const int nv = grid.vertex_count();
  mesh.vertices.assign(nv, GroupPoint{});
  std::vector<char> failed(nv, 0);

  IntegratorConfig c = cfg;
  c.dense_output = false;
  parallel_for(
      nv,
      [&](long i) {
        try {
          mesh.vertices[i] = exp_map(grid.directions[i] * radius, alpha, c);
        } catch (const IntegratorFailure&) {
          failed[i] = 1;
        }
      },
      n_threads);
  for (int i = 0; i < nv; ++i)
    if (failed[i]) mesh.failed_vertices.push_back(i);

  const int nt = grid.n_theta, np = grid.n_phi;
  auto ok = [&](int v) { return !failed[v]; };
  // polar caps
  for (int j = 0; j < np; ++j) {
    const int jn = (j + 1) % np;
    const int a = grid.index(1, j), b = grid.index(1, jn);
    if (ok(0) && ok(a) && ok(b)) mesh.tris.push_back({0, b, a});
    const int c2 = grid.index(nt - 1, j), d = grid.index(nt - 1, jn);
    if (ok(1) && ok(c2) && ok(d)) mesh.tris.push_back({1, c2, d});
  }
  // latitude bands
  for (int i = 1; i < nt - 1; ++i) {
    for (int j = 0; j < np; ++j) {
      const int jn = (j + 1) % np;
      const int a = grid.index(i, j), b = grid.index(i, jn);
      const int c2 = grid.index(i + 1, jn), d = grid.index(i + 1, j);
      if (ok(a) && ok(b) && ok(c2) && ok(d)) mesh.quads.push_back({a, b, c2, d});
    }
  }
  return mesh;
}

void export_obj(const SphereMesh& mesh, std::ostream& os) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "# geodesic sphere: alpha=%.9g radius=%.9g\n",
                mesh.alpha, mesh.radius);
  os << buf;
  os << "# vertices: " << mesh.vertices.size() << "\n";
  for (const GroupPoint& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const auto& t : mesh.tris)
    os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  for (const auto& q : mesh.quads)
    os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' '
       << q[3] + 1 << '\n';
}

}  // namespace solvegeo
