#include "fgeo/cosmology.hpp"

#include "fgeo/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fgeo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, std::string(name) + " must be finite");
}

// (c^3 / (8 pi^2 hbar G)): converts Lambda L^4 into a point count.
double lambda_to_count(const Constants& k) { return k.c * k.c * k.c / (8.0 * kPi * kPi * k.hbar * k.G); }

}  // namespace

double vacuum_point_count(const CosmologyParams& params, const Constants& k) {
  params.validate();
  const double L2 = params.L_U0 * params.L_U0;
  return params.rho_vac * L2 * L2 / (kPi * k.hbar * k.c);
}

double lambda_from_density(double rho_vac, const Constants& k) {
  if (!(rho_vac >= 0.0)) throw Error(ErrorKind::InvalidInput, "rho_vac must be non-negative");
  const double c2 = k.c * k.c;
  return 8.0 * kPi * k.G * rho_vac / (c2 * c2);
}

double lambda_from_density(const CosmologyParams& params, const Constants& k) {
  params.validate();
  return lambda_from_density(params.rho_vac, k);
}

double lambda_from_point_count(double point_count, double L, const Constants& k) {
  if (!(point_count >= 0.0)) throw Error(ErrorKind::InvalidInput, "point count must be non-negative");
  if (!(L > 0.0)) throw Error(ErrorKind::InvalidInput, "L must be positive");
  const double L2 = L * L;
  return point_count / (lambda_to_count(k) * L2 * L2);
}

double universe_diameter_at(const CosmologyParams& params, double dt) {
  params.validate();
  require_finite(dt, "dt");
  return params.L_U0 * (1.0 + params.H0 * dt);
}

LinearEstimate point_count_at_linear(const CosmologyParams& params, double dt, const Constants& k) {
  require_finite(dt, "dt");
  const double lambda = lambda_from_density(params, k);
  const double L2 = params.L_U0 * params.L_U0;
  LinearEstimate est;
  est.value = lambda_to_count(k) * lambda * L2 * L2 * (1.0 + 4.0 * params.H0 * dt);
  est.outside_validity = std::abs(params.H0 * dt) > kLinearValidityBound;
  return est;
}

double point_count_rate(const CosmologyParams& params, const Constants& k) {
  params.validate();
  if (params.kappa != 0) {
    throw Error(ErrorKind::CurvatureUnsupported, "dP/dt = 4 H0 P0 holds only for kappa = 0");
  }
  return 4.0 * params.H0 * vacuum_point_count(params, k);
}

double point_count_rate_general(const CosmologyParams& params, double hubble, double accel_ratio, double dt,
                                const Constants& k) {
  require_finite(hubble, "hubble");
  require_finite(accel_ratio, "accel_ratio");
  require_finite(dt, "dt");
  const double lambda = lambda_from_density(params, k);
  const double L2 = params.L_U0 * params.L_U0;
  const double bracket = (accel_ratio - hubble * hubble) * dt + hubble;
  return 4.0 * lambda_to_count(k) * lambda * L2 * L2 * bracket;
}

double point_count_growth_factor(double H0, double dt) {
  require_finite(H0, "H0");
  require_finite(dt, "dt");
  return std::exp(4.0 * H0 * dt);
}

double pointset_density(const CosmologyParams& params, const Constants& k) {
  const double L = params.L_U0;
  return vacuum_point_count(params, k) / (L * L * L);
}

double min_metric_diameter(const CosmologyParams& params, const Constants& k) {
  params.validate();
  return std::cbrt(kPi * k.hbar * k.c / (params.rho_vac * params.L_U0));
}

double planck_vacuum_density(const Constants& k) {
  k.validate();
  const double c2 = k.c * k.c;
  return c2 * c2 / (8.0 * kPi * k.G * k.l_planck * k.l_planck);
}

double acceleration_constant_check(const CosmologyParams& params, const Constants& k) {
  params.validate();
  const double p_vac = -params.rho_vac;
  return -(8.0 * kPi * k.G / (3.0 * k.c * k.c)) * p_vac;
}

EquationOfState vacuum_eos(const Constants& k) {
  const double c2 = k.c * k.c;
  return [c2](double rho) { return -c2 * rho; };
}

EquationOfState dust_eos() {
  return [](double) { return 0.0; };
}

EquationOfState linear_eos(double w, const Constants& k) {
  const double c2 = k.c * k.c;
  return [w, c2](double rho) { return w * c2 * rho; };
}

double acceleration_ratio(const FluidState& s, double lambda, const Constants& k) {
  const double c2 = k.c * k.c;
  return -(4.0 * kPi * k.G / 3.0) * (s.rho + 3.0 * s.p / c2) + lambda * c2 / (s.a * s.a);
}

double friedmann_residual(const FluidState& s, double lambda, int kappa, const Constants& k) {
  const double c2 = k.c * k.c;
  const double h = s.a_dot / s.a;
  const double a2 = s.a * s.a;
  return h * h - (8.0 * kPi * k.G / 3.0) * s.rho + kappa * c2 / a2 - lambda * c2 / a2;
}

namespace {

using State = std::array<double, 3>;  // a, a_dot, rho

struct System {
  const EquationOfState& eos;
  double lambda;
  double c2;
  const Constants& k;

  State derivative(const State& y) const {
    if (!(y[0] > 0.0) || !std::isfinite(y[0])) {
      throw Error(ErrorKind::NonPositiveScaleFactor, "scale factor left (0, inf) during integration");
    }
    FluidState s;
    s.a = y[0];
    s.a_dot = y[1];
    s.rho = y[2];
    s.p = eos(s.rho);
    const double a_ddot = acceleration_ratio(s, lambda, k) * s.a;
    const double rho_dot = -3.0 * (s.a_dot / s.a) * (s.rho + s.p / c2);
    return {s.a_dot, a_ddot, rho_dot};
  }
};

State axpy(const State& y, double h, const State& d) { return {y[0] + h * d[0], y[1] + h * d[1], y[2] + h * d[2]}; }

State rk4_step(const System& sys, const State& y, double h) {
  const State k1 = sys.derivative(y);
  const State k2 = sys.derivative(axpy(y, 0.5 * h, k1));
  const State k3 = sys.derivative(axpy(y, 0.5 * h, k2));
  const State k4 = sys.derivative(axpy(y, h, k3));
  State out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

TrajectorySample make_sample(double t, const State& y, const EquationOfState& eos, double lambda, int kappa,
                             const Constants& k) {
  TrajectorySample sample;
  sample.state = {t, y[0], y[1], y[2], eos(y[2])};
  if (!(sample.state.a > 0.0)) {
    throw Error(ErrorKind::NonPositiveScaleFactor, "scale factor became non-positive at t = " + std::to_string(t));
  }
  sample.accel_ratio = acceleration_ratio(sample.state, lambda, k);
  sample.friedmann_residual = friedmann_residual(sample.state, lambda, kappa, k);
  return sample;
}

std::vector<TrajectorySample> integrate(const FluidState& initial, const EquationOfState& eos, double lambda,
                                        int kappa, double t_end, double step, const Constants& k) {
  const System sys{eos, lambda, k.c * k.c, k};
  const double span = t_end - initial.t;
  const auto n_steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
  std::vector<TrajectorySample> samples;
  samples.reserve(n_steps + 1);
  State y{initial.a, initial.a_dot, initial.rho};
  samples.push_back(make_sample(initial.t, y, eos, lambda, kappa, k));
  for (std::size_t i = 1; i <= n_steps; ++i) {
    // Uniform grid, last node pinned to t_end.
    const double t_prev = samples.back().state.t;
    const double t_next = i == n_steps ? t_end : initial.t + static_cast<double>(i) * step;
    y = rk4_step(sys, y, t_next - t_prev);
    samples.push_back(make_sample(t_next, y, eos, lambda, kappa, k));
  }
  return samples;
}

}  // namespace

ScaleFactorTrajectory evolve_scale_factor(const FluidState& initial, const EquationOfState& eos, double lambda,
                                          int kappa, double t_end, double step, const Constants& k) {
  if (!(initial.a > 0.0)) throw Error(ErrorKind::NonPositiveScaleFactor, "initial scale factor must be positive");
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorKind::InvalidInput, "step must be positive");
  if (!(t_end > initial.t) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::InvalidInput, "t_end must lie after the initial time");
  }
  if (kappa < -1 || kappa > 1) throw Error(ErrorKind::InvalidInput, "kappa must be -1, 0 or 1");
  if (!eos) throw Error(ErrorKind::InvalidInput, "missing equation of state");

  ScaleFactorTrajectory traj;
  traj.step = step;
  traj.samples = integrate(initial, eos, lambda, kappa, t_end, step, k);
  const auto refined = integrate(initial, eos, lambda, kappa, t_end, 0.5 * step, k);
  const double coarse_end = traj.samples.back().state.a;
  const double fine_end = refined.back().state.a;
  traj.halving_discrepancy = std::abs(coarse_end - fine_end) / std::abs(coarse_end);
  if (!(traj.halving_discrepancy <= kStepHalvingTolerance)) {
    throw Error(ErrorKind::StepTooLarge, "halving the step moves the endpoint scale factor by relative " +
                                             std::to_string(traj.halving_discrepancy));
  }
  return traj;
}

}  // namespace fgeo
