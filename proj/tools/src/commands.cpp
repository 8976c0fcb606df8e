#include "commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "io.hpp"
#include "lenscoupled/constants.hpp"
#include "lenscoupled/coupling.hpp"
#include "lenscoupled/dynamics.hpp"
#include "lenscoupled/greens.hpp"

namespace lenscoupled::cli {

namespace {

Vec3 to_vec3(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) throw UsageError(std::string(what) + " needs three components");
  return {v[0], v[1], v[2]};
}

json complex_json(cplx v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFiniteError("non-finite entry in psf output");
  return {{"re", v.real()}, {"im", v.imag()}};
}

json tensor_json(const ComplexMat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

dynamics::AnalyticMode parse_mode(const std::string& s) {
  if (s == "as_printed") return dynamics::AnalyticMode::as_printed;
  if (s == "full_detuning") return dynamics::AnalyticMode::full_detuning;
  throw UsageError("mode must be as_printed or full_detuning (got '" + s + "')");
}

std::string describe(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ", ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

void run_psf(const PsfParams& p, const numerics::QuadratureSpec& q, std::ostream& out) {
  const Vec3 ri = to_vec3(p.r_i, "--ri");
  const Vec3 rj = to_vec3(p.r_j, "--rj");
  greens::LensSpec lens;
  lens.theta_max = p.theta_max;
  if (!p.lambda_units) {
    lens.wavelength = p.wavelength;
    lens.focal_length = 1e4 * p.wavelength;
  }
  const auto G = greens::psf_green(ri, rj, lens, q);
  const auto fc = greens::effective_coords(ri, rj);
  const auto in = greens::psf_integrals(fc, lens.wavenumber(), lens.theta_max, q);

  json doc;
  doc["units"] = p.lambda_units ? "wavelength" : "m";
  doc["theta_max"] = p.theta_max;
  doc["wavelength"] = lens.wavelength;
  doc["r_i"] = p.r_i;
  doc["r_j"] = p.r_j;
  doc["effective"] = {{"rho", fc.rho}, {"phi", fc.phi}, {"z", fc.z}};
  doc["I1"] = complex_json(in.i1);
  doc["I2"] = complex_json(in.i2);
  doc["I3"] = complex_json(in.i3);
  doc["I4"] = complex_json(in.i4);
  doc["G_psf"] = tensor_json(G);
  doc["g_matrix"] = tensor_json(greens::g_matrix(in, fc));
  emit(p.out, doc.dump(2) + "\n", out);
}

void run_gamma_sweep(const SweepParams& p, const numerics::QuadratureSpec& q, std::ostream& out) {
  if (p.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(p.theta_min > 0.0) || !(p.theta_max >= p.theta_min))
    throw UsageError("need 0 < --theta-min <= --theta-max");
  const auto axis = coupling::parse_axis(p.orientation);
  std::vector<double> grid;
  if (p.steps == 1) {
    grid.push_back(p.theta_max);
  } else {
    for (int i = 0; i < p.steps; ++i)
      grid.push_back(p.theta_min + (p.theta_max - p.theta_min) * i / (p.steps - 1));
  }
  const auto sweep = coupling::gamma_max_sweep(axis, grid, q);
  Csv csv("theta_max,gamma12_over_gamma");
  for (const auto& s : sweep)
    csv.row({s.theta_max, s.gamma12_max_over_gamma},
            [&] { return "coupling.gamma_max_sweep at " + describe({{"theta_max", s.theta_max}}); });
  emit(p.out, csv.str(), out);
}

void run_coupling_map(const MapParams& p, const numerics::QuadratureSpec& q, std::ostream& out) {
  const auto a1 = coupling::parse_axis(p.orientation);
  const auto a2 = coupling::parse_axis(p.orientation2.empty() ? p.orientation : p.orientation2);
  const auto plane = coupling::parse_plane(p.plane);
  if (p.resolution < 2) throw UsageError("--resolution must be at least 2");
  const double scale = p.lambda_units ? 1.0 : p.wavelength;
  coupling::MapGrid grid;
  grid.extent = p.extent / scale;
  grid.resolution = p.resolution;
  greens::LensSpec lens;
  lens.theta_max = p.theta_max;
  const auto map = coupling::coupling_map(a1, a2, plane, grid, lens, q);
  Csv csv(plane == coupling::Plane::xz ? "x,z,J_over_hGamma,Gamma12_over_Gamma"
                                       : "x,y,J_over_hGamma,Gamma12_over_Gamma");
  for (std::size_t i = 0; i < map.J_over_hGamma.size(); ++i) {
    const double a = map.first(i) * scale;
    const double b = map.second(i) * scale;
    csv.row({a, b, map.J_over_hGamma[i], map.Gamma12_over_Gamma[i]},
            [&] { return "coupling.coupling_map at " + describe({{"first", a}, {"second", b}}); });
  }
  emit(p.out, csv.str(), out);
}

void run_spectrum(const SpectrumParams& p, const numerics::QuadratureSpec& q, std::ostream& out) {
  if (p.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(p.delta_max >= p.delta_min)) throw UsageError("need --delta-min <= --delta-max");
  const auto mode = parse_mode(p.mode);
  cplx g{p.J12, 0.5 * p.Gamma12};
  if (std::isfinite(p.position)) {
    coupling::DipolePair pair;
    pair.u1 = pair.u2 = coupling::axis_vector(coupling::parse_axis(p.orientation));
    pair.r2 = {0.0, 0.0, p.position};
    greens::LensSpec lens;
    lens.theta_max = p.theta_max;
    g = coupling::coupling_coefficients(pair, lens, q).G12_over_Gamma();
  }
  std::vector<double> grid;
  if (p.steps == 1) {
    grid.push_back(p.delta_min);
  } else {
    for (int i = 0; i < p.steps; ++i)
      grid.push_back(p.delta_min + (p.delta_max - p.delta_min) * i / (p.steps - 1));
  }
  // Gamma = 1: detunings are in units of Gamma.
  const auto coupled = dynamics::excitation_spectrum(g, p.saturation, grid, 1.0, mode);
  const auto bare = dynamics::excitation_spectrum(0.0, p.saturation, grid, 1.0, mode);
  Csv csv("delta_over_Gamma,n1_over_s2,n1_over_s2_nocoupling,xi_over_s2");
  for (std::size_t i = 0; i < grid.size(); ++i)
    csv.row({grid[i], coupled[i].n1_over_s2, bare[i].n1_over_s2, coupled[i].xi_over_s2}, [&] {
      return "dynamics.excitation_spectrum at " +
             describe({{"delta", grid[i]}, {"J12", g.real()}, {"Gamma12", 2.0 * g.imag()}, {"s", p.saturation}});
    });
  emit(p.out, csv.str(), out);
}

std::string summary_path_for(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  std::string stem = (dot != std::string::npos && (slash == std::string::npos || dot > slash))
                         ? csv_path.substr(0, dot)
                         : csv_path;
  std::string path = stem + ".json";
  if (path == csv_path) path = stem + ".summary.json";
  return path;
}

void run_trap(const TrapParams& p, const numerics::QuadratureSpec& q, std::ostream& out) {
  if (p.out.empty() || p.out == "-") throw UsageError("trap needs --out <csv path>");
  trap::TrapRequest req;
  req.species = p.custom_species ? *p.custom_species : trap::species_preset(p.species);
  req.theta_max = p.theta_max;
  req.orientation = coupling::parse_axis(p.orientation);
  req.drive = dynamics::DriveSpec::from_saturation(p.saturation, p.detuning * req.species.Gamma);
  req.mode = parse_mode(p.mode);
  req.n_driven = p.n_driven;
  req.z_start = p.z_min;
  req.z_stop = p.z_max;
  req.z_points = p.z_points;
  req.gravity_axis = to_vec3(p.gravity_axis, "--gravity-axis");
  req.e0_over_Er = p.e0_over_Er;
  req.quadrature = q;
  const auto prof = trap::trap_profile(req);

  const double lambda = req.lambda_D();
  Csv csv("z_over_lambda,U_dd_J,U_g_J,U_total_J,heating_W");
  for (std::size_t i = 0; i < prof.z.size(); ++i)
    csv.row({prof.z[i] / lambda, prof.U_dd[i], prof.U_g[i], prof.U_total[i], prof.heating[i]}, [&] {
      return "trap.trap_profile at " + describe({{"z_over_lambda", prof.z[i] / lambda}, {"N", p.n_driven}});
    });

  const auto& lm = prof.landmarks;
  const double Gamma = req.species.Gamma;
  json summary;
  summary["species"] = req.species.label;
  summary["n_driven"] = p.n_driven;
  summary["z_min"] = lm.z_min;
  summary["z_min_over_lambda"] = lm.z_min / lambda;
  summary["depth_over_Er"] = lm.depth / prof.recoil;
  summary["U_dd_min_over_Er"] = lm.U_dd_min / prof.recoil;
  summary["J_min_over_hGamma"] = lm.J_min_over_hGamma;
  summary["J_top_over_hGamma"] = lm.J_top_over_hGamma;
  summary["Gamma_tot_over_Gamma"] = lm.Gamma_tot / Gamma;
  summary["t_trap_s"] = lm.lifetime.t_trap;
  summary["t_trap_over_Gamma_inv"] = lm.lifetime.t_trap * Gamma;
  summary["t_bound_s"] = lm.lifetime.t_bound;
  summary["recoil_energy_J"] = prof.recoil;
  for (const auto& [k, v] : summary.items())
    if (v.is_number() && !std::isfinite(v.get<double>()))
      throw NonFiniteError("non-finite trap summary field '" + k + "'");

  emit(p.out, csv.str(), out);
  emit(p.summary.empty() ? summary_path_for(p.out) : p.summary, summary.dump(2) + "\n", out);
}

}  // namespace lenscoupled::cli
