#pragma once

#include <iosfwd>
#include <string>

namespace fgeo {

/// SI physical constants (CODATA 2018 defaults).
struct Constants {
  double hbar = 1.054571817e-34;  // J s
  double c = 2.99792458e8;        // m / s
  double G = 6.67430e-11;         // m^3 kg^-1 s^-2
  double l_planck = 1.616255e-35; // m
  double l_strong = 1e-15;        // m

  /// Throws InvalidInput unless every field is strictly positive and finite.
  void validate() const;
};

/// Observational inputs for the vacuum point-count calculator.
struct CosmologyParams {
  double rho_vac = 5.4e-10;  // J / m^3
  double L_U0 = 8.8e26;      // m, diameter of the observable universe
  double H0 = 2.19e-18;      // 1 / s
  int kappa = 0;             // spatial curvature sign

  void validate() const;
};

inline constexpr double kSecondsPerJulianYear = 3.15576e7;

struct Config {
  Constants constants;
  CosmologyParams params;
};

/// Flat `key = value` text; `#` starts a comment. Recognised keys: hbar, c,
/// G, l_planck, l_strong, rho_vac, L_U0, H0, kappa. Unset keys keep defaults.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

}  // namespace fgeo
