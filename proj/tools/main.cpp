// Command-line front end: every library operation behind a subcommand with
// reproducible file-based CSV/JSON/OBJ output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solvegeo/cutlocus.hpp"
#include "solvegeo/elliptic.hpp"
#include "solvegeo/flow.hpp"
#include "solvegeo/period.hpp"
#include "solvegeo/sphere.hpp"
#include "solvegeo/verify.hpp"

using json = nlohmann::json;
using namespace solvegeo;

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int n = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> r.lo >> c1 >> r.hi >> c2 >> r.n) || c1 != ':' || c2 != ':' ||
      r.n < 1)
    throw CLI::ValidationError("range", "expected lo:hi:n");
  return r;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_table(const Table& t, const std::string& out_path,
                 const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json j = json::array();
    for (const auto& row : t.rows) {
      json obj;
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      j.push_back(obj);
    }
    os << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.header.size(); ++i)
      os << (i ? "," : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << fmt12(row[i]);
      os << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << os.str();
  }
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvegeo: geodesic flow, periods, and cut-locus data for the "
               "solvable-group family interpolating Sol, H2xR and H3"};
  app.require_subcommand(1);

  std::string out_path, format = "csv";
  double alpha_v = 0.5, beta_v = -1.0, x0_v = -1.0, radius = 5.0, tol = 1e-12;
  double t_end = 20.0, periods = 1.0;
  int samples = 200;
  std::string range_s, res_s = "128,256", system = "symmetric";
  std::optional<double> verify_alpha;
  double effort = 1.0;
  unsigned seed = 20240817;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tol", tol, "integrator tolerance");
  };

  CLI::App* c_cyl = app.add_subcommand("cylinder", "invariant-cylinder slice samples (w vs z)");
  c_cyl->add_option("--alpha", alpha_v)->required();
  c_cyl->add_option("--beta", beta_v)->required();
  c_cyl->add_option("--samples", samples);
  add_common(c_cyl);

  CLI::App* c_flow = app.add_subcommand("flow", "trajectory samples of one of the flows");
  c_flow->add_option("--alpha", alpha_v)->required();
  auto* fx = c_flow->add_option("--x0", x0_v, "equator abscissa of the loop");
  auto* fb = c_flow->add_option("--beta", beta_v, "top-of-loop parameter");
  fx->excludes(fb);
  c_flow->add_option("--system", system)
      ->check(CLI::IsMember({"sphere", "geodesic", "symmetric", "variational"}));
  c_flow->add_option("--t-end", t_end);
  c_flow->add_option("--samples", samples);
  add_common(c_flow);

  CLI::App* c_fl = app.add_subcommand("flowline", "plane-curve samples (a(t), b(t)) up to the half period");
  c_fl->add_option("--alpha", alpha_v);
  c_fl->add_option("--x0", x0_v)->required();
  c_fl->add_option("--samples", samples);
  add_common(c_fl);

  CLI::App* c_per = app.add_subcommand("period", "loop periods");
  c_per->add_option("--alpha", alpha_v)->required();
  auto* pb = c_per->add_option("--beta", beta_v);
  auto* px = c_per->add_option("--x0", x0_v);
  auto* pr = c_per->add_option("--x0-range", range_s, "lo:hi:n sweep");
  pb->excludes(px);
  pb->excludes(pr);
  px->excludes(pr);
  add_common(c_per);

  CLI::App* c_tab = app.add_subcommand("table", "period table at beta = 0.999 for alpha = 0.1 .. 1.0");
  add_common(c_tab);

  CLI::App* c_cut = app.add_subcommand("cutlocus", "boundary-curve samples (x0, a, b, da, db)");
  c_cut->add_option("--alpha", alpha_v);
  c_cut->add_option("--x0-range", range_s)->required();
  add_common(c_cut);

  CLI::App* c_bp = app.add_subcommand("bprime", "b'(t) trace over multiples of the half period");
  c_bp->add_option("--alpha", alpha_v)->required();
  c_bp->add_option("--x0", x0_v)->required();
  c_bp->add_option("--periods", periods, "trace length in half periods");
  c_bp->add_option("--samples", samples);
  add_common(c_bp);

  CLI::App* c_sph = app.add_subcommand("sphere", "geodesic sphere mesh as Wavefront OBJ");
  c_sph->add_option("--alpha", alpha_v)->required();
  c_sph->add_option("--radius", radius);
  c_sph->add_option("--res", res_s, "n_theta,n_phi");
  c_sph->add_option("--out", out_path);
  c_sph->add_option("--tol", tol);

  CLI::App* c_ver = app.add_subcommand("verify", "run the property-check suite, JSON report");
  double ver_alpha_in = -10.0;
  c_ver->add_option("--alpha", ver_alpha_in, "restrict to checks for this alpha");
  c_ver->add_option("--effort", effort, "grid scale factor");
  c_ver->add_option("--seed", seed, "reserved; fixed sampling seed");
  c_ver->add_option("--out", out_path);

  CLI::App* c_g = app.add_subcommand("g-function", "period-slope gap samples (x0, G)");
  c_g->add_option("--x0-range", range_s)->required();
  add_common(c_g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = tol;

    if (c_cyl->parsed()) {
      const Alpha alpha(alpha_v);
      const double a = alpha_v;
      const auto [zt, zb] = endpoint_times(beta_v, alpha);
      Table t;
      t.header = {"z", "w_plus", "w_minus"};
      const double rhs = (1.0 + a) / (a * beta_v * beta_v);
      for (int i = 0; i <= samples; ++i) {
        const double z = -zb + (zt + zb) * i / samples;
        const double w2 = rhs - std::exp(2.0 * z) - std::exp(-2.0 * a * z) / a;
        const double w = std::sqrt(std::max(0.0, w2));
        t.rows.push_back({z, w, -w});
      }
      write_table(t, out_path, format);
      return 0;
    }

    if (c_flow->parsed()) {
      const Alpha alpha(alpha_v);
      double x0 = x0_v;
      if (beta_v > 0.0) x0 = x0_from_beta(beta_v, alpha);
      if (!(x0 > 0.0))
        throw CLI::ValidationError("flow", "need --x0 or --beta");
      Table t;
      if (system == "sphere") {
        const double y0 = std::sqrt(1.0 - x0 * x0);
        SphereTrajectory traj = flow_sphere(SphereState(x0, y0, 0.0), t_end, alpha, cfg);
        t.header = {"t", "u1", "u2", "u3"};
        for (int i = 0; i <= samples; ++i) {
          const double tt = t_end * i / samples;
          const Vec3 u = traj.at(tt);
          t.rows.push_back({tt, u.x, u.y, u.z});
        }
      } else if (system == "geodesic") {
        const double y0 = std::sqrt(1.0 - x0 * x0);
        GeodesicTrajectory traj =
            exp_map_trajectory(Vec3{x0, y0, 0.0} * t_end, alpha, cfg);
        t.header = {"t", "x", "y", "z", "u1", "u2", "u3"};
        for (int i = 0; i <= samples; ++i) {
          const double tt = t_end * i / samples;
          const GeodesicState s = traj.at(tt);
          t.rows.push_back({tt, s.pos.x, s.pos.y, s.pos.z, s.dir.x, s.dir.y, s.dir.z});
        }
      } else if (system == "variational") {
        VariationalTrajectory traj = flow_variational(x0, t_end, alpha, cfg);
        t.header = {"t", "x", "y", "z", "a", "b", "xbar", "ybar", "zbar", "abar", "bbar"};
        for (int i = 0; i <= samples; ++i) {
          const double tt = t_end * i / samples;
          const VarFlowState s = traj.at(tt);
          t.rows.push_back({tt, s.x, s.y, s.z, s.a, s.b, s.xbar, s.ybar, s.zbar, s.abar, s.bbar});
        }
      } else {
        SymmetricTrajectory traj = flow_symmetric(x0, t_end, alpha, cfg);
        t.header = {"t", "x", "y", "z", "a", "b"};
        for (int i = 0; i <= samples; ++i) {
          const double tt = t_end * i / samples;
          const SymFlowState s = traj.at(tt);
          t.rows.push_back({tt, s.x, s.y, s.z, s.a, s.b});
        }
      }
      write_table(t, out_path, format);
      return 0;
    }

    if (c_fl->parsed()) {
      Table t;
      t.header = {"t", "a", "b", "aprime", "bprime"};
      for (const PlaneCurveSample& s : lambda_curve(x0_v, Alpha(alpha_v), samples))
        t.rows.push_back({s.t, s.a, s.b, s.aprime, s.bprime});
      write_table(t, out_path, format);
      return 0;
    }

    if (c_per->parsed()) {
      const Alpha alpha(alpha_v);
      Table t;
      t.header = {"alpha", "beta", "period"};
      if (!range_s.empty()) {
        const Range r = parse_range(range_s);
        for (int i = 0; i < r.n; ++i) {
          const double x0 =
              (r.n == 1) ? r.lo : r.lo + (r.hi - r.lo) * i / (r.n - 1);
          const double b = beta_from_x0(x0, alpha);
          t.rows.push_back({alpha_v, b, period_quadrature(b, alpha)});
        }
      } else {
        double b = beta_v;
        if (x0_v > 0.0) b = beta_from_x0(x0_v, alpha);
        if (!(b > 0.0))
          throw CLI::ValidationError("period", "need --beta, --x0 or --x0-range");
        t.rows.push_back({alpha_v, b, period_quadrature(b, alpha)});
      }
      write_table(t, out_path, format);
      return 0;
    }

    if (c_tab->parsed()) {
      Table t;
      t.header = {"alpha", "period_beta_0.999", "pi_sqrt2_over_sqrt_alpha"};
      for (int i = 1; i <= 10; ++i) {
        const double a = 0.1 * i;
        t.rows.push_back({a, period_quadrature(0.999, Alpha(a)),
                          std::numbers::pi * std::sqrt(2.0 / a)});
      }
      write_table(t, out_path, format);
      return 0;
    }

    if (c_cut->parsed()) {
      const Range r = parse_range(range_s);
      std::vector<double> grid;
      for (int i = 0; i < r.n; ++i)
        grid.push_back((r.n == 1) ? r.lo : r.lo + (r.hi - r.lo) * i / (r.n - 1));
      Table t;
      t.header = {"x0", "a", "b", "da_dx0", "db_dx0"};
      for (const BoundaryPoint& p : boundary_curve(Alpha(alpha_v), grid))
        t.rows.push_back({p.x0, p.a_end, p.b_end, p.da_dx0, p.db_dx0});
      write_table(t, out_path, format);
      return 0;
    }

    if (c_bp->parsed()) {
      Table t;
      t.header = {"t", "bprime"};
      for (const auto& [tt, bp] : bprime_trace(Alpha(alpha_v), x0_v, periods, samples))
        t.rows.push_back({tt, bp});
      write_table(t, out_path, format);
      return 0;
    }

    if (c_sph->parsed()) {
      int nt = 128, np = 256;
      if (std::sscanf(res_s.c_str(), "%d,%d", &nt, &np) != 2)
        throw CLI::ValidationError("sphere", "--res expects n_theta,n_phi");
      const DirectionGrid grid = make_latlong_grid(nt, np);
      const SphereMesh mesh = geodesic_sphere(Alpha(alpha_v), radius, grid, cfg);
      std::ostringstream os;
      export_obj(mesh, os);
      write_text(os.str(), out_path);
      if (!mesh.complete()) {
        std::cerr << "sphere: " << mesh.failed_vertices.size()
                  << " vertices failed to integrate; mesh has holes\n";
        return 1;
      }
      return 0;
    }

    if (c_ver->parsed()) {
      VerifyOptions opts;
      if (ver_alpha_in > -5.0) opts.alpha = ver_alpha_in;
      opts.effort = effort;
      opts.seed = seed;
      const std::vector<CheckReport> reports = run_verification(opts);
      bool all_pass = true;
      json checks = json::array();
      for (const CheckReport& r : reports) {
        checks.push_back({{"check_name", r.name},
                          {"grid", r.grid},
                          {"pass", r.pass},
                          {"exploratory", r.exploratory},
                          {"worst_margin", r.worst_margin},
                          {"location", r.location},
                          {"detail", r.detail}});
        if (!r.pass && !r.exploratory) all_pass = false;
      }
      json report = {{"schema_version", 1},
                     {"suite", "solvegeo-verify"},
                     {"pass", all_pass},
                     {"checks", checks}};
      write_text(report.dump(2) + "\n", out_path);
      return all_pass ? 0 : 1;
    }

    if (c_g->parsed()) {
      const Range r = parse_range(range_s);
      Table t;
      t.header = {"x0", "g"};
      for (int i = 0; i < r.n; ++i) {
        const double x0 =
            (r.n == 1) ? r.lo : r.lo + (r.hi - r.lo) * i / (r.n - 1);
        t.rows.push_back({x0, g_function(x0)});
      }
      write_table(t, out_path, format);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
