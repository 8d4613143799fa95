// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "fgeo/cosmology.hpp"
#include "fgeo/error.hpp"
#include "fgeo/finite_field.hpp"
#include "fgeo/finite_geometry.hpp"
#include "fgeo/finite_hilbert.hpp"
#include "fgeo/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace fgeo;

namespace {

int failures = 0;

void report(int id, const std::string& name, const std::function<std::string(bool&)>& body) {
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
}

bool within(double value, double target, double rel_tol) { return std::abs(value - target) <= rel_tol * std::abs(target); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

RationalNumber q(long long n, long long d) { return RationalNumber(BigInt(n), BigInt(d)); }

}  // namespace

int main() {
  const CosmologyParams obs;  // rho_vac = 5.4e-10 J/m^3, L_U = 8.8e26 m, H0 = 2.19e-18 1/s
  const Constants k;

  report(1, "vacuum point count", [&](bool& ok) {
    const double P = vacuum_point_count(obs);
    ok = within(P, 3.3e123, 0.03);
    return "P = " + fmt(P) + " (target 3.3e123 +-3%)";
  });

  report(2, "minimum metric diameter", [&](bool& ok) {
    const double d = min_metric_diameter(obs);
    ok = within(d, 5.9e-15, 0.02);
    return "d = " + fmt(d) + " m (target 5.9e-15 +-2%)";
  });

  report(3, "Planck comparison", [&](bool& ok) {
    Constants kp;
    kp.l_planck = 1.616e-35;
    const double rho = planck_vacuum_density(kp);
    CosmologyParams p = obs;
    p.rho_vac = rho;
    const double d = min_metric_diameter(p, kp);
    ok = within(rho, 1.85e112, 0.01) && within(d, 1.83e-55, 0.02);
    return "rho = " + fmt(rho) + " J/m^3 (1.85e112 +-1%), d = " + fmt(d) + " m (1.83e-55 +-2%)";
  });

  report(4, "growth factor", [&](bool& ok) {
    const double gyr = 1e9 * kSecondsPerJulianYear;
    const double exponent = std::log(point_count_growth_factor(obs.H0, gyr));
    const double factor = point_count_growth_factor(obs.H0, 6 * gyr);
    ok = within(exponent, 0.28, 0.02) && within(factor, 5.25, 0.01);
    return "exponent/Gyr = " + fmt(exponent) + " (0.28 +-2%), 6 Gyr factor = " + fmt(factor) + " (5.25 +-1%)";
  });

  report(5, "regularization anchors", [&](bool& ok) {
    ok = zeta_negative(0) == q(-1, 2) && zeta_negative(1) == q(-1, 12) && bernoulli(1) == q(1, 2) &&
         bernoulli(2) == q(1, 6);
    return "zeta(0) = " + zeta_negative(0).to_string() + ", zeta(-1) = " + zeta_negative(1).to_string() +
           ", B1 = " + bernoulli(1).to_string() + ", B2 = " + bernoulli(2).to_string();
  });

  report(6, "F4 degeneracy", [&](bool& ok) {
    const auto f4 = make_extension_field(2, 2);
    const auto one = FieldElement::one(f4);
    const FieldElement alpha(f4, {0, 1});
    const AffinePoint A{{one, one}};
    const AffinePoint B{{alpha, alpha}};
    const bool degenerate = !(A == B) && squared_distance(A, B).is_zero();
    // Oracle: scan every pair of AG(2,3).
    const AffineSpace ag23(make_prime_field(3), 2);
    const auto pts = ag23.enumerate_points();
    std::size_t zero_pairs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) zero_pairs += squared_distance(pts[i], pts[j]).is_zero();
    }
    const bool none = !find_degenerate_pair(ag23).has_value() && zero_pairs == 0;
    ok = degenerate && none;
    return std::string("d^2((1,1),(α,α)) = ") + squared_distance(A, B).to_string() +
           ", AG(2,3) degenerate pairs: " + std::to_string(zero_pairs);
  });

  report(7, "Hesse property", [&](bool& ok) {
    const auto h = incidence_structure(AffineSpace(make_prime_field(3), 2));
    const auto sizes = h.line_sizes();
    const auto degrees = h.point_degrees();
    const bool counts = h.point_count() == 9 && h.line_count() == 12 &&
                        std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s == 3; }) &&
                        std::all_of(degrees.begin(), degrees.end(), [](auto d) { return d == 4; });
    const bool h3 = check_hesse_property(h).holds;
    const bool h2 = check_hesse_property(incidence_structure(AffineSpace(make_prime_field(2), 2))).holds;
    ok = counts && h3 && !h2;
    return std::to_string(h.point_count()) + " points, " + std::to_string(h.line_count()) +
           " lines, AG(2,3) hesse = " + (h3 ? "true" : "false") + ", AG(2,2) hesse = " + (h2 ? "true" : "false");
  });

  report(8, "Sylvester-Gallai", [&](bool& ok) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coord(-10, 10);
    std::uniform_int_distribution<int> size(3, 8);
    int tested = 0, counterexamples = 0;
    while (tested < 200) {
      std::vector<RationalPoint> pts;
      const int n = size(rng);
      while (static_cast<int>(pts.size()) < n) {
        RationalPoint p{RationalNumber(coord(rng)), RationalNumber(coord(rng))};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
      }
      const auto r = find_ordinary_line(pts);
      if (r.status == OrdinaryLineResult::Status::Collinear) continue;
      ++tested;
      bool good = r.status == OrdinaryLineResult::Status::OrdinaryLine;
      if (good) {
        int on = 0;
        for (const auto& p : pts) on += collinear(pts[r.pair->first], pts[r.pair->second], p);
        good = on == 2;
      }
      counterexamples += !good;
    }
    ok = counterexamples == 0;
    return std::to_string(tested) + " sets, " + std::to_string(counterexamples) + " counterexamples";
  });

  report(9, "field-axiom suite", [&](bool& ok) {
    std::vector<FieldRef> fields = {make_prime_field(2), make_prime_field(3), make_prime_field(5),
                                    make_prime_field(7), make_extension_field(2, 2), make_gaussian_extension(3),
                                    make_gaussian_extension(7)};
    int passed = 0;
    for (const auto& f : fields) passed += verify_field_axioms(f).all_passed();
    std::string witness;
    try {
      make_gaussian_extension(5);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotAField) witness = e.witness();
    }
    // Check the witness really multiplies to zero in E_5[i]/(i^2+1).
    const bool witness_ok = witness == "(2+i)*(2+4i)=0" && ((2 * 2 - 1 * 4) % 5 == 0) && ((2 * 4 + 1 * 2) % 5 == 0);
    ok = passed == static_cast<int>(fields.size()) && witness_ok;
    return std::to_string(passed) + "/" + std::to_string(fields.size()) + " fields pass, R_5 witness " +
           (witness.empty() ? "missing" : witness);
  });

  report(10, "cardinality laws", [&](bool& ok) {
    int cases = 0, mismatches = 0;
    for (std::uint32_t p = 2; p <= 256; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint32_t kk = 1; kk <= 6; ++kk) {
        for (std::uint32_t dim = 1; dim <= 16; ++dim) {
          const auto expected = hilbert_cardinality(p, kk, dim);
          if (expected > 65536) break;
          const auto f = make_extension_field(p, kk);
          const auto n_vec = FiniteHilbertSpace(f, dim).enumerate_vectors().size();
          const auto n_pts = AffineSpace(f, dim).enumerate_points().size();
          mismatches += BigInt(n_vec) != expected || pointset_cardinality(f->order(), dim) != BigInt(n_pts);
          ++cases;
        }
      }
    }
    ok = mismatches == 0 && cases > 0;
    return std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches";
  });

  report(11, "integrator", [&](bool& ok) {
    const double rho = obs.rho_vac / (k.c * k.c);
    const double H = std::sqrt(8 * std::acos(-1.0) * k.G * rho / 3);
    FluidState s0;
    s0.a = 1.0;
    s0.a_dot = H;
    s0.rho = rho;
    const auto traj = evolve_scale_factor(s0, vacuum_eos(k), 0.0, 0, 10.0 / H, 0.005 / H, k);
    double err_a = 0, drift = 0, res = 0;
    for (const auto& s : traj.samples) {
      err_a = std::max(err_a, std::abs(s.state.a - std::exp(H * s.state.t)) / std::exp(H * s.state.t));
      drift = std::max(drift, std::abs(s.state.rho - rho) / rho);
      const double h = s.state.a_dot / s.state.a;
      res = std::max(res, std::abs(s.friedmann_residual) / (h * h));
    }
    ok = err_a <= 1e-6 && drift <= 1e-10 && res <= 1e-8 && traj.halving_discrepancy <= 1e-6;
    return "a vs exp(Ht) " + fmt(err_a) + ", rho drift " + fmt(drift) + ", residual " + fmt(res) + ", halving " +
           fmt(traj.halving_discrepancy);
  });

  report(12, "consistency web", [&](bool& ok) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_lamb = 0, worst_slope = 0;
    for (int i = 0; i < 100; ++i) {
      CosmologyParams p;
      p.rho_vac = std::pow(10.0, -12 + 4 * u(rng));
      p.L_U0 = std::pow(10.0, 24 + 4 * u(rng));
      p.H0 = std::pow(10.0, -19 + 2 * u(rng));
      const double lam = lambda_from_density(p, k);
      worst_lamb = std::max(worst_lamb, std::abs(lambda_from_point_count(vacuum_point_count(p, k), p.L_U0, k) - lam) / lam);
      const double dt = 1e-3 / p.H0;
      const double slope =
          (point_count_at_linear(p, dt, k).value - point_count_at_linear(p, -dt, k).value) / (2 * dt);
      const double rate = point_count_rate(p, k);
      worst_slope = std::max(worst_slope, std::abs(slope - rate) / rate);
    }
    ok = worst_lamb <= 1e-12 && worst_slope <= 1e-6;
    return "Lambda round trip " + fmt(worst_lamb) + ", slope vs rate " + fmt(worst_slope) + " over 100 sets";
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
