#include "fgeo/error.hpp"
#include "fgeo/finite_hilbert.hpp"

#include <doctest.h>

using namespace fgeo;

namespace {

FiniteVector vec(const FieldRef& f, std::vector<std::vector<std::uint32_t>> coeffs) {
  FiniteVector v;
  for (auto& c : coeffs) v.coords.emplace_back(f, std::move(c));
  return v;
}

}  // namespace

TEST_CASE("cardinality") {
  CHECK(hilbert_cardinality(2, 1, 3) == 8);
  CHECK(hilbert_cardinality(3, 2, 2) == 81);
  CHECK(FiniteHilbertSpace(make_gaussian_extension(3), 2).enumerate_vectors().size() == 81);
  CHECK_THROWS_AS(hilbert_cardinality(3, 1, 0), Error);
  CHECK_THROWS_AS(hilbert_cardinality(4, 1, 2), Error);
  CHECK_THROWS_AS(hilbert_cardinality(2, 6, 1000), Error);
  CHECK(hilbert_cardinality(2, 6, 100) == BigInt(1) << 600);
}

TEST_CASE("cardinality matches enumeration up to 2^16 vectors") {
  int cases = 0;
  for (std::uint32_t p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t k = 1; k <= 6; ++k) {
      for (std::uint32_t dim = 1; dim <= 16; ++dim) {
        const auto expected = hilbert_cardinality(p, k, dim);
        if (expected > 65536) break;
        const FiniteHilbertSpace h(make_extension_field(p, k), dim);
        CAPTURE(p);
        CAPTURE(k);
        CAPTURE(dim);
        CHECK(BigInt(h.enumerate_vectors().size()) == expected);
        CHECK(h.cardinality() == expected);
        ++cases;
      }
    }
  }
  CHECK(cases > 50);
}

TEST_CASE("inner product over R_3") {
  const auto r3 = make_gaussian_extension(3);
  const auto v = vec(r3, {{1, 0}, {0, 1}});  // (1, i)
  CHECK(inner_product(v, v) == FieldElement::from_int(r3, 2));
  CHECK(norm_squared(v) == FieldElement::from_int(r3, 2));
  const FiniteHilbertSpace h(r3, 2);
  CHECK(inner_product(h.zero(), v).is_zero());
  CHECK(norm_squared(h.zero()).is_zero());
  CHECK(norm_squared(vec(r3, {{1, 0}})).is_one());
  CHECK_THROWS_AS(inner_product(v, vec(r3, {{1, 0}})), Error);
}

TEST_CASE("conjugate symmetry and additivity") {
  const FiniteHilbertSpace r32(make_gaussian_extension(3), 2);
  const auto vs = r32.enumerate_vectors();
  for (const auto& u : vs) {
    for (const auto& v : vs) CHECK(inner_product(u, v) == conj(inner_product(v, u)));
  }
  const FiniteHilbertSpace r71(make_gaussian_extension(7), 1);
  for (const auto& u : r71.enumerate_vectors()) {
    for (const auto& v : r71.enumerate_vectors()) CHECK(inner_product(u, v) == conj(inner_product(v, u)));
  }
  bool ok = true;
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      for (const auto& w : vs) ok = ok && inner_product(u, add(v, w)) == add(inner_product(u, v), inner_product(u, w));
    }
  }
  CHECK(ok);
}

TEST_CASE("isotropic vectors exist in F4^2") {
  const FiniteHilbertSpace h(make_extension_field(2, 2), 2);
  int isotropic = 0;
  for (const auto& v : h.enumerate_vectors()) {
    if (v == h.zero()) continue;
    if (norm_squared(v).is_zero()) ++isotropic;
  }
  // conj on F4 is x -> x^2, so <v,v> = x^3 + y^3 with x^3 = 1 for x != 0:
  // (x, y) is isotropic iff both coordinates are nonzero.
  CHECK(isotropic == 9);
}
