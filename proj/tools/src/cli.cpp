#include "lenscoupled_cli/cli.hpp"

#include <functional>
#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "io.hpp"
#include "lenscoupled/errors.hpp"

namespace lenscoupled::cli {

namespace {

enum Exit : int { kOk = 0, kRuntime = 1, kUsage = 2 };

// Flags are parsed into shadow storage and copied over the config-derived
// values only when given, so flags win over the config file.
class Binder {
 public:
  template <class T>
  CLI::Option* option(CLI::App& app, const std::string& names, T& target, const std::string& help) {
    auto shadow = std::make_shared<T>(target);
    auto* opt = app.add_option(names, *shadow, help);
    items_.emplace_back(opt, [shadow, &target] { target = *shadow; });
    return opt;
  }

  CLI::Option* flag(CLI::App& app, const std::string& names, bool& target, const std::string& help) {
    auto shadow = std::make_shared<bool>(target);
    auto* opt = app.add_flag(names, *shadow, help);
    items_.emplace_back(opt, [shadow, &target] { target = *shadow; });
    return opt;
  }

  void apply() const {
    for (const auto& [opt, copy] : items_)
      if (opt->count() > 0) copy();
  }

 private:
  std::vector<std::pair<CLI::Option*, std::function<void()>>> items_;
};

CLI::Option* vec3(CLI::Option* o) { return o->expected(3)->delimiter(','); }

trap::AtomSpecies species_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("config: species must be a preset label or an object");
  trap::AtomSpecies s;
  const json wrapper = {{"species", j}};
  Section sec(wrapper, "species");
  for (const char* key : {"label", "dipole_moment", "lambda0", "Gamma", "mass"})
    if (!sec.has(key)) throw UsageError(std::string("config: species.") + key + " is required");
  sec.read("label", s.label);
  sec.read("dipole_moment", s.dipole_moment);
  sec.read("lambda0", s.lambda0);
  sec.read("Gamma", s.Gamma);
  sec.read("mass", s.mass);
  sec.finish();
  s.validate();
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lens-mediated dipole-dipole interactions between two atoms", "lenscoupled"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (schema 1); flags override it");

  Binder bind;
  PsfParams psf;
  SweepParams sweep;
  MapParams map;
  SpectrumParams spec;
  TrapParams trp;

  auto* c_psf = app.add_subcommand("psf", "Point-spread tensor and focal integrals for one pair");
  vec3(bind.option(*c_psf, "--ri", psf.r_i, "point near the lower focus, x,y,z"));
  vec3(bind.option(*c_psf, "--rj", psf.r_j, "point near the upper focus, x,y,z"));
  bind.option(*c_psf, "--theta-max", psf.theta_max, "collection half-angle (rad)");
  bind.option(*c_psf, "--wavelength", psf.wavelength, "wavelength in m (SI lengths)");
  bind.flag(*c_psf, "--lambda-units,!--si-units", psf.lambda_units, "lengths in wavelengths (default) or m");
  bind.option(*c_psf, "--out", psf.out, "output path (default stdout)");

  auto* c_sweep = app.add_subcommand("gamma-sweep", "Maximum Gamma12/Gamma against the aperture");
  bind.option(*c_sweep, "--orientation", sweep.orientation, "dipole axis x|y|z");
  bind.option(*c_sweep, "--theta-min", sweep.theta_min, "first aperture (rad)");
  bind.option(*c_sweep, "--theta-max", sweep.theta_max, "last aperture (rad)");
  bind.option(*c_sweep, "--steps", sweep.steps, "number of rows");
  bind.option(*c_sweep, "--out", sweep.out, "output path (default stdout)");

  auto* c_map = app.add_subcommand("coupling-map", "J12 and Gamma12 over a plane around the upper focus");
  bind.option(*c_map, "--orientation", map.orientation, "dipole axis of both atoms x|y|z");
  bind.option(*c_map, "--orientation2", map.orientation2, "dipole axis of atom 2, if different");
  bind.option(*c_map, "--plane", map.plane, "xz or xy");
  bind.option(*c_map, "--extent", map.extent, "half-width of the scan");
  bind.option(*c_map, "--resolution", map.resolution, "samples per axis");
  bind.option(*c_map, "--theta-max", map.theta_max, "collection half-angle (rad)");
  bind.option(*c_map, "--wavelength", map.wavelength, "wavelength in m (SI lengths)");
  bind.flag(*c_map, "--lambda-units,!--si-units", map.lambda_units, "lengths in wavelengths (default) or m");
  bind.option(*c_map, "--out", map.out, "output path (default stdout)");

  auto* c_spec = app.add_subcommand("spectrum", "Excitation of atom 1 against detuning");
  bind.option(*c_spec, "--J12", spec.J12, "dispersive coupling / hbar Gamma");
  bind.option(*c_spec, "--Gamma12", spec.Gamma12, "dissipative coupling / Gamma");
  bind.option(*c_spec, "--position", spec.position, "on-axis z of atom 2 (wavelengths); replaces --J12/--Gamma12");
  bind.option(*c_spec, "--orientation", spec.orientation, "dipole axis for --position");
  bind.option(*c_spec, "--theta-max", spec.theta_max, "collection half-angle for --position (rad)");
  bind.option(*c_spec, "--saturation", spec.saturation, "saturation parameter s");
  bind.option(*c_spec, "--delta-min", spec.delta_min, "first detuning / Gamma");
  bind.option(*c_spec, "--delta-max", spec.delta_max, "last detuning / Gamma");
  bind.option(*c_spec, "--steps", spec.steps, "number of rows");
  bind.option(*c_spec, "--mode", spec.mode, "as_printed or full_detuning");
  bind.option(*c_spec, "--out", spec.out, "output path (default stdout)");

  auto* c_trap = app.add_subcommand("trap", "Trap potential, heating and lifetime in SI units");
  auto* species_opt = bind.option(*c_trap, "--species", trp.species, "species preset label");
  bind.option(*c_trap, "--theta-max", trp.theta_max, "collection half-angle (rad)");
  bind.option(*c_trap, "--orientation", trp.orientation, "dipole axis x|y|z");
  bind.option(*c_trap, "--saturation", trp.saturation, "saturation parameter s");
  bind.option(*c_trap, "--detuning", trp.detuning, "drive detuning / Gamma");
  bind.option(*c_trap, "--n-driven", trp.n_driven, "number of driven atoms at the upper focus");
  bind.option(*c_trap, "--z-min", trp.z_min, "first axial position (m)");
  bind.option(*c_trap, "--z-max", trp.z_max, "last axial position (m)");
  bind.option(*c_trap, "--z-points", trp.z_points, "axial samples");
  vec3(bind.option(*c_trap, "--gravity-axis", trp.gravity_axis, "unit vector of gravity, x,y,z"));
  bind.option(*c_trap, "--mode", trp.mode, "as_printed or full_detuning");
  bind.option(*c_trap, "--e0", trp.e0_over_Er, "initial energy / recoil energy");
  bind.option(*c_trap, "--out", trp.out, "CSV output path");
  bind.option(*c_trap, "--summary", trp.summary, "JSON summary path (default: --out with .json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const json cfg = config_path.empty() ? json::object() : load_config(config_path);
    const auto quad = quadrature_from(cfg);

    if (*c_psf) {
      Section s(cfg, "psf");
      s.read("r_i", psf.r_i);
      s.read("r_j", psf.r_j);
      s.read("theta_max", psf.theta_max);
      s.read("wavelength", psf.wavelength);
      s.read("lambda_units", psf.lambda_units);
      s.read("out", psf.out);
      s.finish();
      bind.apply();
      run_psf(psf, quad, out);
    } else if (*c_sweep) {
      Section s(cfg, "gamma_sweep");
      s.read("orientation", sweep.orientation);
      s.read("theta_min", sweep.theta_min);
      s.read("theta_max", sweep.theta_max);
      s.read("steps", sweep.steps);
      s.read("out", sweep.out);
      s.finish();
      bind.apply();
      run_gamma_sweep(sweep, quad, out);
    } else if (*c_map) {
      Section s(cfg, "coupling_map");
      s.read("orientation", map.orientation);
      s.read("orientation2", map.orientation2);
      s.read("plane", map.plane);
      s.read("extent", map.extent);
      s.read("resolution", map.resolution);
      s.read("theta_max", map.theta_max);
      s.read("wavelength", map.wavelength);
      s.read("lambda_units", map.lambda_units);
      s.read("out", map.out);
      s.finish();
      bind.apply();
      run_coupling_map(map, quad, out);
    } else if (*c_spec) {
      Section s(cfg, "spectrum");
      s.read("J12", spec.J12);
      s.read("Gamma12", spec.Gamma12);
      s.read("position", spec.position);
      s.read("orientation", spec.orientation);
      s.read("theta_max", spec.theta_max);
      s.read("saturation", spec.saturation);
      s.read("delta_min", spec.delta_min);
      s.read("delta_max", spec.delta_max);
      s.read("steps", spec.steps);
      s.read("mode", spec.mode);
      s.read("out", spec.out);
      s.finish();
      bind.apply();
      run_spectrum(spec, quad, out);
    } else if (*c_trap) {
      if (const auto* sp = cfg.contains("species") ? &cfg.at("species") : nullptr) {
        if (sp->is_string())
          trp.species = sp->get<std::string>();
        else
          trp.custom_species = species_from_json(*sp);
      }
      Section s(cfg, "trap");
      s.read("theta_max", trp.theta_max);
      s.read("orientation", trp.orientation);
      s.read("saturation", trp.saturation);
      s.read("detuning", trp.detuning);
      s.read("n_driven", trp.n_driven);
      s.read("z_min", trp.z_min);
      s.read("z_max", trp.z_max);
      s.read("z_points", trp.z_points);
      s.read("gravity_axis", trp.gravity_axis);
      s.read("mode", trp.mode);
      s.read("e0_over_Er", trp.e0_over_Er);
      s.read("out", trp.out);
      s.read("summary", trp.summary);
      s.finish();
      bind.apply();
      // An explicit preset flag replaces a custom species from the config.
      if (species_opt->count() > 0) trp.custom_species.reset();
      run_trap(trp, quad, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kRuntime;
  } catch (const NonFiniteError& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}

}  // namespace lenscoupled::cli
