#include "fgeo/finite_hilbert.hpp"

#include "fgeo/error.hpp"
#include "fgeo/finite_geometry.hpp"

#include <cmath>

namespace fgeo {

namespace {

void require_compatible(const FiniteVector& u, const FiniteVector& v) {
  if (u.coords.size() != v.coords.size()) {
    throw Error(ErrorKind::DimMismatch, "vectors have different dimensions");
  }
  if (u.coords.empty()) throw Error(ErrorKind::DimMismatch, "zero-dimensional vectors");
}

}  // namespace

std::string FiniteVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].to_string();
  }
  return out + ")";
}

FiniteHilbertSpace::FiniteHilbertSpace(FieldRef field, std::uint32_t dim) : field_(std::move(field)), dim_(dim) {
  if (!field_) throw Error(ErrorKind::InvalidInput, "null field");
  if (dim_ < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
}

BigInt FiniteHilbertSpace::cardinality() const { return hilbert_cardinality(field_->p, field_->k, dim_); }

FiniteVector FiniteHilbertSpace::zero() const { return vector(0); }

FiniteVector FiniteHilbertSpace::vector(std::uint64_t index) const {
  // Same ordering as affine points over the same field.
  AffinePoint pt = AffineSpace(field_, dim_).point(index);
  return FiniteVector{std::move(pt.coords)};
}

std::vector<FiniteVector> FiniteHilbertSpace::enumerate_vectors() const {
  auto points = AffineSpace(field_, dim_).enumerate_points();
  std::vector<FiniteVector> out;
  out.reserve(points.size());
  for (auto& pt : points) out.push_back(FiniteVector{std::move(pt.coords)});
  return out;
}

BigInt hilbert_cardinality(std::uint32_t p, std::uint32_t k, std::uint32_t dim) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
  const double bits = static_cast<double>(k) * dim * std::log2(static_cast<double>(p));
  if (bits > 4096.0) throw Error(ErrorKind::Overflow, "cardinality exceeds 4096-bit exact-integer capacity");
  return boost::multiprecision::pow(BigInt(p), k * dim);
}

FieldElement inner_product(const FiniteVector& u, const FiniteVector& v) {
  require_compatible(u, v);
  FieldElement sum = FieldElement::zero(u.coords.front().spec());
  for (std::size_t i = 0; i < u.coords.size(); ++i) sum = add(sum, mul(conj(u.coords[i]), v.coords[i]));
  return sum;
}

FieldElement norm_squared(const FiniteVector& v) { return inner_product(v, v); }

FiniteVector add(const FiniteVector& u, const FiniteVector& v) {
  require_compatible(u, v);
  FiniteVector out;
  out.coords.reserve(u.coords.size());
  for (std::size_t i = 0; i < u.coords.size(); ++i) out.coords.push_back(add(u.coords[i], v.coords[i]));
  return out;
}

}  // namespace fgeo
