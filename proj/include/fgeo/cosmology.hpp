#pragma once

#include "fgeo/constants.hpp"

#include <functional>
#include <vector>

namespace fgeo {

/// Linearized formulas are only trusted for |H0 dt| up to this bound.
inline constexpr double kLinearValidityBound = 0.1;

/// P(L_U) = rho_vac L_U^4 / (pi hbar c): points making up the vacuum of a
/// cube with edge L_U.
double vacuum_point_count(const CosmologyParams& params, const Constants& k = {});

/// Lambda = 8 pi G rho_vac / c^4, in 1/m^2. The scalar overload admits
/// rho_vac = 0.
double lambda_from_density(const CosmologyParams& params, const Constants& k = {});
double lambda_from_density(double rho_vac, const Constants& k = {});

/// Lambda = (8 pi^2 hbar G / c^3) P / L^4.
double lambda_from_point_count(double point_count, double L, const Constants& k = {});

/// L_U0 (1 + H0 dt).
double universe_diameter_at(const CosmologyParams& params, double dt);

struct LinearEstimate {
  double value = 0.0;
  /// Set when |H0 dt| exceeds kLinearValidityBound.
  bool outside_validity = false;
};

/// (c^3 Lambda / (8 pi^2 hbar G)) L_U0^4 (1 + 4 H0 dt).
LinearEstimate point_count_at_linear(const CosmologyParams& params, double dt, const Constants& k = {});

/// dP/dt = 4 H0 P0 for a flat universe; CurvatureUnsupported otherwise.
double point_count_rate(const CosmologyParams& params, const Constants& k = {});

/// General rate (c^3 Lambda / (2 pi^2 hbar G)) L_U0^4 [(a''/a - (a'/a)^2) dt + a'/a].
double point_count_rate_general(const CosmologyParams& params, double hubble, double accel_ratio, double dt,
                                const Constants& k = {});

/// exp(4 H0 dt).
double point_count_growth_factor(double H0, double dt);

/// P / L_U0^3, points per cubic metre.
double pointset_density(const CosmologyParams& params, const Constants& k = {});

/// cbrt(pi hbar c / (rho_vac L_U0)): edge of a box holding about one point.
double min_metric_diameter(const CosmologyParams& params, const Constants& k = {});

/// c^4 / (8 pi G l_P^2), J/m^3.
double planck_vacuum_density(const Constants& k = {});

/// a''/a for a vacuum-dominated universe: (8 pi G / (3 c^2)) rho_vac.
double acceleration_constant_check(const CosmologyParams& params, const Constants& k = {});

struct FluidState {
  double t = 0.0;      // s
  double a = 1.0;      // scale factor
  double a_dot = 0.0;  // 1/s (times the units of a)
  double rho = 0.0;    // kg / m^3
  double p = 0.0;      // Pa
};

/// Pressure as a function of mass density.
using EquationOfState = std::function<double(double rho)>;

EquationOfState vacuum_eos(const Constants& k = {});
EquationOfState dust_eos();
/// p = w c^2 rho.
EquationOfState linear_eos(double w, const Constants& k = {});

/// a''/a from the acceleration equation with the Lambda c^2 / a^2 term.
double acceleration_ratio(const FluidState& s, double lambda, const Constants& k = {});

/// (a'/a)^2 - (8 pi G / 3) rho + kappa c^2 / a^2 - Lambda c^2 / a^2.
double friedmann_residual(const FluidState& s, double lambda, int kappa, const Constants& k = {});

struct TrajectorySample {
  FluidState state;
  double accel_ratio = 0.0;
  double friedmann_residual = 0.0;
};

struct ScaleFactorTrajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  int scheme_order = 4;
  /// |a_end(step) - a_end(step/2)| / |a_end(step)|.
  double halving_discrepancy = 0.0;
};

inline constexpr double kStepHalvingTolerance = 1e-6;

/// Fixed-step classical RK4 on (a, a', rho) with
///   a''/a = -(4 pi G / 3)(rho + 3p/c^2) + Lambda c^2 / a^2
///   rho'  = -3 (a'/a)(rho + p/c^2).
/// The run is repeated at step/2 and StepTooLarge is thrown when the endpoint
/// scale factors differ by more than kStepHalvingTolerance.
ScaleFactorTrajectory evolve_scale_factor(const FluidState& initial, const EquationOfState& eos, double lambda,
                                          int kappa, double t_end, double step, const Constants& k = {});

}  // namespace fgeo
