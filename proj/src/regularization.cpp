#include "fgeo/regularization.hpp"

#include "fgeo/error.hpp"

#include <cmath>
#include <numbers>

namespace fgeo {

namespace {

void require_length(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw Error(ErrorKind::InvalidInput, "box length L must be positive");
}

// sqrt(3) pi hbar c / L
double mode_prefactor(double L, const Constants& k) {
  require_length(L);
  return std::sqrt(3.0) * std::numbers::pi * k.hbar * k.c / L;
}

const BernoulliTable& shared_table() {
  static const BernoulliTable table(kMaxBernoulliIndex);
  return table;
}

}  // namespace

BernoulliTable::BernoulliTable(int n_max) {
  if (n_max < 0 || n_max > kMaxBernoulliIndex) {
    throw Error(ErrorKind::RangeLimit, "Bernoulli index must lie in [0, 64]");
  }
  values_.reserve(n_max + 1);
  // Row n+1 of Pascal's triangle, updated in place.
  std::vector<BigInt> binom{1};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigInt> next(n + 2, 1);
    for (int j = 1; j <= n; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);
    RationalNumber acc(n + 1);
    for (int j = 0; j < n; ++j) acc -= RationalNumber(binom[j], 1) * values_[j];
    values_.push_back(acc / RationalNumber(n + 1));
  }
}

const RationalNumber& BernoulliTable::operator[](int n) const {
  if (n < 0 || n > n_max()) throw Error(ErrorKind::RangeLimit, "Bernoulli index outside table");
  return values_[n];
}

RationalNumber bernoulli(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) throw Error(ErrorKind::RangeLimit, "Bernoulli index must lie in [0, 64]");
  return shared_table()[n];
}

RationalNumber zeta_negative(int s) {
  if (s < 0) throw Error(ErrorKind::RangeLimit, "zeta_negative needs s >= 0");
  return -bernoulli(s + 1) / RationalNumber(s + 1);
}

std::int64_t partial_sum_linear(std::int64_t N) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be >= 1");
  const __int128 sum = static_cast<__int128>(N) * (N + 1) / 2;
  if (sum > INT64_MAX) throw Error(ErrorKind::Overflow, "N(N+1)/2 exceeds int64");
  return static_cast<std::int64_t>(sum);
}

void ModeSpec::validate() const {
  if (!(m0 >= 0.0)) throw Error(ErrorKind::InvalidInput, "rest mass must be non-negative");
  require_length(L);
  if (cutoff < 1) throw Error(ErrorKind::InvalidInput, "mode cutoff must be >= 1");
}

double mode_energy(double m0, double kx, double ky, double kz, const Constants& k) {
  if (!(m0 >= 0.0)) throw Error(ErrorKind::InvalidInput, "rest mass must be non-negative");
  const double compton = m0 * k.c / k.hbar;
  return k.c * std::sqrt(compton * compton + kx * kx + ky * ky + kz * kz);
}

double mode_energy(const ModeSpec& mode, const Constants& k) {
  mode.validate();
  return mode_energy(mode.m0, mode.k[0], mode.k[1], mode.k[2], k);
}

double vacuum_energy_partial(double L, std::int64_t N, const Constants& k) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be >= 1");
  const double prefactor = mode_prefactor(L, k);
  // Past int64 range the float product is still well defined.
  const double sum = N <= 3'000'000'000 ? static_cast<double>(partial_sum_linear(N))
                                        : 0.5 * static_cast<double>(N) * (static_cast<double>(N) + 1.0);
  return prefactor * sum;
}

double vacuum_energy_regularized(double L, const Constants& k) {
  return mode_prefactor(L, k) * zeta_negative(1).to_double();
}

double oscillator_count_energy(double L, double P, const Constants& k) {
  require_length(L);
  if (!(P >= 0.0)) throw Error(ErrorKind::InvalidInput, "point count must be non-negative");
  const double omega = 2.0 * std::numbers::pi * k.c / L;
  return 0.5 * k.hbar * omega * P;
}

double point_bound_from_cutoff(std::int64_t K) {
  if (K < 1) throw Error(ErrorKind::InvalidInput, "cutoff K must be >= 1");
  const double kd = static_cast<double>(K);
  return 0.5 * std::sqrt(3.0) * kd * (kd + 1.0);
}

}  // namespace fgeo
