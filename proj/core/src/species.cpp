#include <cmath>
#include <map>
#include <sstream>

#include "lenscoupled/constants.hpp"
#include "lenscoupled/errors.hpp"
#include "lenscoupled/trap.hpp"

namespace lenscoupled::trap {

namespace {

const std::map<std::string, AtomSpecies, std::less<>>& registry() {
  static const std::map<std::string, AtomSpecies, std::less<>> presets = [] {
    std::map<std::string, AtomSpecies, std::less<>> m;
    // D2 line treated as a two-level transition; full isotope mass.
    m.emplace("Cs133-D2", AtomSpecies{"Cs133-D2", 2.69e-29, 852e-9, 2.0 * constants::pi * 5.23e6,
                                      133.0 * constants::atomic_mass_unit});
    return m;
  }();
  return presets;
}

}  // namespace

double AtomSpecies::free_space_gamma() const {
  return coupling::free_space_decay(dipole_moment, 2.0 * constants::pi * constants::speed_of_light / lambda0);
}

void AtomSpecies::validate() const {
  for (double v : {dipole_moment, lambda0, Gamma, mass})
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("species '" + label + "': all physical fields must be positive and finite");
  const double g = free_space_gamma();
  if (std::abs(g - Gamma) > 0.05 * Gamma) {
    std::ostringstream os;
    os << "species '" << label << "': Gamma = " << Gamma << " rad/s disagrees with the free-space rate "
       << g << " rad/s by more than 5%";
    throw DomainError(os.str());
  }
}

const AtomSpecies& species_preset(std::string_view label) {
  const auto& r = registry();
  const auto it = r.find(label);
  if (it == r.end()) throw DomainError("unknown species preset '" + std::string(label) + "'");
  return it->second;
}

std::vector<std::string> preset_labels() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace lenscoupled::trap
