#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fgeo {

/// Largest field order accepted by element enumeration and extension search.
inline constexpr std::uint64_t kMaxEnumeratedOrder = std::uint64_t{1} << 20;
/// Largest order for the exhaustive (cubic) axiom checks.
inline constexpr std::uint64_t kMaxAxiomCheckOrder = 500;
inline constexpr std::uint32_t kMaxExtensionDegree = 6;

enum class Construction { prime, gaussian, general };

std::string_view to_string(Construction c);

/// GF(p^k) presented as E_p[x] / (modulus). `modulus` is monic, low-to-high,
/// of length k + 1. Prime fields use the modulus x.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;
  Construction construction = Construction::prime;

  std::uint64_t order() const;
  std::string describe() const;

  /// Same field presentation; the construction tag is not part of identity.
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.k == b.k && a.modulus == b.modulus;
  }
};

using FieldRef = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t n);

/// Trial-division irreducibility test for a monic polynomial over E_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

FieldRef make_prime_field(std::uint32_t p);

/// R_p = E_p[i] / (i^2 + 1). Throws NotAField with a zero-divisor witness
/// when -1 is a square mod p (p = 2 or p = 1 mod 4).
FieldRef make_gaussian_extension(std::uint32_t p);

/// GF(p^k) with the smallest monic irreducible modulus, ordered by the same
/// integer encoding used for elements.
FieldRef make_extension_field(std::uint32_t p, std::uint32_t k);

/// Immutable element of a FieldSpec in canonical reduced form.
class FieldElement {
 public:
  FieldElement(FieldRef spec, std::vector<std::uint32_t> coeffs);

  static FieldElement zero(const FieldRef& spec);
  static FieldElement one(const FieldRef& spec);
  static FieldElement from_int(const FieldRef& spec, std::int64_t value);
  /// Element with coefficients given by the base-p digits of `index`.
  static FieldElement from_index(const FieldRef& spec, std::uint64_t index);

  const FieldRef& spec() const noexcept { return spec_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldRef spec_;
  std::vector<std::uint32_t> coeffs_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);
/// Order-2 automorphism a -> a^(p^(k/2)) for even k (x+iy -> x-iy on R_p);
/// the identity for odd k.
FieldElement conj(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/// All q elements in index order (coefficient c0 varies fastest).
std::vector<FieldElement> enumerate_elements(const FieldRef& spec);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  std::string structure;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

/// Exhaustive check of associativity, commutativity, distributivity,
/// identities and inverses.
AxiomReport verify_field_axioms(const FieldRef& spec);

/// Diagnostic: the same checks on Z/n for arbitrary n >= 2.
AxiomReport verify_residue_ring_axioms(std::uint32_t n);

/// Diagnostic: the same checks on E_p[i]/(i^2+1) without the field guard.
AxiomReport verify_gaussian_ring_axioms(std::uint32_t p);

}  // namespace fgeo
