#include "fgeo/error.hpp"
#include "fgeo/regularization.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fgeo;

namespace {

RationalNumber q(long long n, long long d) { return RationalNumber(BigInt(n), BigInt(d)); }

// Oracle: Akiyama-Tanigawa, which yields B_1 = +1/2.
std::vector<RationalNumber> akiyama_tanigawa(int n_max) {
  std::vector<RationalNumber> out;
  std::vector<RationalNumber> row(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    row[m] = q(1, m + 1);
    for (int j = m; j >= 1; --j) row[j - 1] = RationalNumber(j) * (row[j - 1] - row[j]);
    out.push_back(row[0]);
  }
  return out;
}

BigInt binom(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Bernoulli anchors") {
  CHECK(bernoulli(0) == RationalNumber(1));
  CHECK(bernoulli(1) == q(1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(4) == q(-1, 30));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK_THROWS_AS(bernoulli(65), Error);
  CHECK_THROWS_AS(bernoulli(-1), Error);
}

TEST_CASE("Bernoulli numbers match the Akiyama-Tanigawa oracle") {
  const auto oracle = akiyama_tanigawa(kMaxBernoulliIndex);
  const BernoulliTable table(kMaxBernoulliIndex);
  for (int n = 0; n <= kMaxBernoulliIndex; ++n) {
    CAPTURE(n);
    CHECK(bernoulli(n) == oracle[n]);
    CHECK(table[n] == oracle[n]);
  }
}

TEST_CASE("Bernoulli recurrence and odd vanishing") {
  for (int n = 0; n <= 30; ++n) {
    RationalNumber s;
    for (int j = 0; j <= n; ++j) s += RationalNumber(binom(n + 1, j), 1) * bernoulli(j);
    CHECK(s == RationalNumber(n + 1));
  }
  for (int n = 3; n <= 31; n += 2) CHECK(bernoulli(n).is_zero());
}

TEST_CASE("zeta anchors") {
  CHECK(zeta_negative(0) == q(-1, 2));
  CHECK(zeta_negative(1) == q(-1, 12));
  CHECK(zeta_negative(3) == q(1, 120));
  CHECK(zeta_negative(2).is_zero());
  CHECK_THROWS_AS(zeta_negative(64), Error);
}

TEST_CASE("partial sums") {
  CHECK(partial_sum_linear(1) == 1);
  CHECK(partial_sum_linear(10) == 55);
  CHECK_THROWS_AS(partial_sum_linear(0), Error);
  std::int64_t loop = 0;
  for (std::int64_t n = 1; n <= 1000000; ++n) loop += n;
  CHECK(partial_sum_linear(1000000) == loop);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> pick(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const auto N = pick(rng);
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= N; ++n) s += n;
    REQUIRE(partial_sum_linear(N) == s);
  }
  CHECK_THROWS_AS(partial_sum_linear(std::int64_t{1} << 62), Error);
  CHECK_THROWS_AS(partial_sum_linear(-1), Error);
}

TEST_CASE("mode energies") {
  const Constants k;
  CHECK(mode_energy(0, 0, 0, 0) == 0.0);
  CHECK(mode_energy(0, 2.0, 2.0, 2.0) == doctest::Approx(k.c * std::sqrt(3.0) * 2.0).epsilon(1e-14));
  CHECK(mode_energy(0, -2.0, -2.0, -2.0) == doctest::Approx(k.c * std::sqrt(3.0) * 2.0).epsilon(1e-14));
  const double m = 9.1093837015e-31;
  CHECK(mode_energy(m, 0, 0, 0) == doctest::Approx(m * k.c * k.c / k.hbar).epsilon(1e-14));
  ModeSpec spec;
  spec.m0 = m;
  CHECK(mode_energy(spec) == mode_energy(m, 0, 0, 0));
  CHECK_THROWS_AS(mode_energy(-1.0, 0, 0, 0), Error);
}

TEST_CASE("vacuum energy sums") {
  const Constants k;
  const double pi = std::numbers::pi;
  CHECK(vacuum_energy_partial(1.0, 1) == doctest::Approx(1.720e-25).epsilon(1e-3));
  CHECK(vacuum_energy_partial(1.0, 1) == doctest::Approx(std::sqrt(3.0) * pi * k.hbar * k.c).epsilon(1e-14));
  CHECK(vacuum_energy_regularized(1.0) == doctest::Approx(-1.433e-26).epsilon(1e-3));
  CHECK(vacuum_energy_regularized(1.0) / vacuum_energy_partial(1.0, 1) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(vacuum_energy_regularized(2.0) == doctest::Approx(vacuum_energy_regularized(1.0) / 2).epsilon(1e-15));

  // Oracle: accumulate (hbar/2)|omega| over the diagonal modes kx=ky=kz=2 pi n / L.
  for (double L : {1.0, 3.5}) {
    double acc = 0.0;
    for (std::int64_t n = 1; n <= 10000; ++n) {
      const double kn = 2.0 * pi * static_cast<double>(n) / L;
      acc += 0.5 * k.hbar * mode_energy(0, kn, kn, kn);
      if (n == 1 || n == 10 || n == 10000) CHECK(vacuum_energy_partial(L, n) == doctest::Approx(acc).epsilon(1e-10));
    }
  }
  CHECK(vacuum_energy_partial(2.0, 7) == doctest::Approx(vacuum_energy_partial(1.0, 7) / 2).epsilon(1e-15));
  for (std::int64_t N = 1; N < 200; ++N) CHECK(vacuum_energy_partial(1.0, N + 1) > vacuum_energy_partial(1.0, N));
  for (double L = 0.5; L < 50; L *= 1.7) CHECK(vacuum_energy_partial(L * 1.7, 5) < vacuum_energy_partial(L, 5));
  CHECK_THROWS_AS(vacuum_energy_partial(0.0, 1), Error);
}

TEST_CASE("oscillator counts and bounds") {
  const Constants k;
  CHECK(oscillator_count_energy(1.0, 0.0) == 0.0);
  CHECK(oscillator_count_energy(1.0, 1.0) == doctest::Approx(9.930e-26).epsilon(1e-3));
  const double e = oscillator_count_energy(2.5, 1234.0);
  CHECK(e * 2.5 / (std::numbers::pi * k.hbar * k.c) == doctest::Approx(1234.0).epsilon(1e-14));
  CHECK(point_bound_from_cutoff(1) == doctest::Approx(std::sqrt(3.0)));
  CHECK(point_bound_from_cutoff(10) == doctest::Approx(55 * std::sqrt(3.0)));
  // The point count whose oscillator energy equals the partial sum to K never exceeds the bound.
  for (std::int64_t K = 1; K <= 1000; K += 37) {
    const double P = vacuum_energy_partial(1.0, K) / oscillator_count_energy(1.0, 1.0);
    CHECK(P <= point_bound_from_cutoff(K) * (1 + 1e-12));
  }
}
