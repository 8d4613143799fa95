#include "fgeo/constants.hpp"

#include "fgeo/error.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace fgeo {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " must be positive and finite");
  }
}

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::InvalidInput,
                "config line " + std::to_string(line_no) + ": bad number for " + key + ": '" + text + "'");
  }
  return v;
}

}  // namespace

void Constants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  require_positive(G, "G");
  require_positive(l_planck, "l_planck");
  require_positive(l_strong, "l_strong");
}

void CosmologyParams::validate() const {
  require_positive(rho_vac, "rho_vac");
  require_positive(L_U0, "L_U0");
  require_positive(H0, "H0");
  if (kappa < -1 || kappa > 1) throw Error(ErrorKind::InvalidInput, "kappa must be -1, 0 or 1");
}

Config parse_config(std::istream& in) {
  Config cfg;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const double v = parse_number(key, value, line_no);
    if (key == "hbar") cfg.constants.hbar = v;
    else if (key == "c") cfg.constants.c = v;
    else if (key == "G") cfg.constants.G = v;
    else if (key == "l_planck") cfg.constants.l_planck = v;
    else if (key == "l_strong") cfg.constants.l_strong = v;
    else if (key == "rho_vac") cfg.params.rho_vac = v;
    else if (key == "L_U0") cfg.params.L_U0 = v;
    else if (key == "H0") cfg.params.H0 = v;
    else if (key == "kappa") {
      if (v != std::floor(v)) throw Error(ErrorKind::InvalidInput, "kappa must be an integer");
      cfg.params.kappa = static_cast<int>(v);
    } else {
      throw Error(ErrorKind::InvalidInput, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  cfg.constants.validate();
  cfg.params.validate();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open config file " + path);
  return parse_config(in);
}

}  // namespace fgeo
