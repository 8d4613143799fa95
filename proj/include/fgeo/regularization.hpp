#pragma once

#include "fgeo/constants.hpp"
#include "fgeo/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fgeo {

inline constexpr int kMaxBernoulliIndex = 64;

/// B_0..B_n under the B_1 = +1/2 convention.
class BernoulliTable {
 public:
  explicit BernoulliTable(int n_max);

  int n_max() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const RationalNumber& operator[](int n) const;
  const std::vector<RationalNumber>& values() const noexcept { return values_; }

 private:
  std::vector<RationalNumber> values_;
};

/// Exact B_n, 0 <= n <= 64, from sum_{j<=n} C(n+1, j) B_j = n + 1.
RationalNumber bernoulli(int n);

/// zeta(-s) = -B_{s+1} / (s + 1): the regularized value of sum n^s.
RationalNumber zeta_negative(int s);

/// 1 + 2 + ... + N = N(N+1)/2; Overflow if it leaves int64.
std::int64_t partial_sum_linear(std::int64_t N);

struct ModeSpec {
  double m0 = 0.0;                       // kg
  std::array<double, 3> k{0.0, 0.0, 0.0};  // 1/m
  double L = 1.0;                        // m
  std::int64_t cutoff = 1;

  void validate() const;
};

/// |omega_k| = c sqrt((m0 c / hbar)^2 + |k|^2), rad/s.
double mode_energy(double m0, double kx, double ky, double kz, const Constants& k = {});
double mode_energy(const ModeSpec& mode, const Constants& k = {});

/// Massless modes with kx = ky = kz = 2 pi n / L summed to N:
/// (sqrt(3) pi hbar c / L) N(N+1)/2, joules.
double vacuum_energy_partial(double L, std::int64_t N, const Constants& k = {});

/// The same prefactor times the regularized sum_{n>=1} n = -1/12.
double vacuum_energy_regularized(double L, const Constants& k = {});

/// (hbar / 2)(2 pi c / L) P = pi hbar c P / L.
double oscillator_count_energy(double L, double P, const Constants& k = {});

/// Upper bound on P(L) implied by a mode cutoff K: (sqrt(3)/2) K(K+1).
double point_bound_from_cutoff(std::int64_t K);

}  // namespace fgeo
