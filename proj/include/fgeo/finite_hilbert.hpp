#pragma once

#include "fgeo/finite_field.hpp"
#include "fgeo/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fgeo {

struct FiniteVector {
  std::vector<FieldElement> coords;

  std::string to_string() const;
  friend bool operator==(const FiniteVector&, const FiniteVector&) = default;
};

/// dim-dimensional coordinate space over GF(p^k) with the sesquilinear form
/// <u, v> = sum conj(u_n) v_n.
class FiniteHilbertSpace {
 public:
  FiniteHilbertSpace(FieldRef field, std::uint32_t dim);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  BigInt cardinality() const;

  FiniteVector zero() const;
  FiniteVector vector(std::uint64_t index) const;
  /// All q^dim vectors; SizeLimit beyond 2^20.
  std::vector<FiniteVector> enumerate_vectors() const;

 private:
  FieldRef field_;
  std::uint32_t dim_;
};

/// p^(k * dim), exact.
BigInt hilbert_cardinality(std::uint32_t p, std::uint32_t k, std::uint32_t dim);

FieldElement inner_product(const FiniteVector& u, const FiniteVector& v);
/// <v, v>; may vanish for v != 0.
FieldElement norm_squared(const FiniteVector& v);
FiniteVector add(const FiniteVector& u, const FiniteVector& v);

}  // namespace fgeo
