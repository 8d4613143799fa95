#include "fgeo/finite_field.hpp"

#include "fgeo/error.hpp"

#include <algorithm>
#include <sstream>

namespace fgeo {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Polynomial long division over E_p; divisor must be nonzero.
void divmod(const Poly& num, const Poly& den, std::uint64_t p, Poly& quot, Poly& rem) {
  rem = num;
  trim(rem);
  quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = inv_mod(den.back(), p);
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const std::uint64_t factor = rem.back() * lead_inv % p;
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) {
      rem[i + shift] = (rem[i + shift] + p - factor * den[i] % p) % p;
    }
    trim(rem);
  }
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

Poly to_poly(std::span<const std::uint32_t> c) {
  Poly out(c.begin(), c.end());
  trim(out);
  return out;
}

std::vector<std::uint32_t> monic_from_index(std::uint32_t p, std::uint32_t degree, std::uint64_t index) {
  std::vector<std::uint32_t> poly(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    poly[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  poly[degree] = 1;
  return poly;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec() && !(*a.spec() == *b.spec())) {
    throw Error(ErrorKind::SpecMismatch,
                "operands belong to different fields: " + a.spec()->describe() + " vs " + b.spec()->describe());
  }
}

FieldRef unchecked_spec(std::uint32_t p, std::vector<std::uint32_t> modulus, Construction c) {
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->k = static_cast<std::uint32_t>(modulus.size() - 1);
  spec->modulus = std::move(modulus);
  spec->construction = c;
  return spec;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::prime: return "prime";
    case Construction::gaussian: return "gaussian";
    case Construction::general: return "general";
  }
  return "unknown";
}

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << p;
  if (k > 1) os << "^" << k;
  os << ")";
  if (construction == Construction::gaussian) os << " [R_" << p << "]";
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f = to_poly(poly);
  if (f.size() < 2) return false;
  const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree == 1) return true;
  // A reducible f has a monic factor of degree <= deg/2.
  Poly quot;
  Poly rem;
  for (std::uint32_t d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = checked_power(p, d, ~std::uint64_t{0} >> 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto g = monic_from_index(p, d, idx);
      divmod(f, Poly(g.begin(), g.end()), p, quot, rem);
      if (rem.empty()) return false;
    }
  }
  return true;
}

FieldRef make_prime_field(std::uint32_t p) {
  require_prime(p);
  return unchecked_spec(p, {0, 1}, Construction::prime);
}

FieldRef make_gaussian_extension(std::uint32_t p) {
  require_prime(p);
  // x^2 + 1 is reducible iff it has a root r, and then (r+i)(r-i) = r^2 + 1 = 0.
  for (std::uint64_t r = 0; r < p; ++r) {
    if ((r * r + 1) % p == 0) {
      auto ring = unchecked_spec(p, {1, 0, 1}, Construction::gaussian);
      const FieldElement a(ring, {static_cast<std::uint32_t>(r), 1});
      const FieldElement b(ring, {static_cast<std::uint32_t>(r), p - 1});
      throw Error(ErrorKind::NotAField,
                  "x^2+1 is reducible mod " + std::to_string(p) + "; R_" + std::to_string(p) +
                      " has zero divisors",
                  "(" + a.to_string() + ")*(" + b.to_string() + ")=0");
    }
  }
  return unchecked_spec(p, {1, 0, 1}, Construction::gaussian);
}

FieldRef make_extension_field(std::uint32_t p, std::uint32_t k) {
  require_prime(p);
  if (k < 1 || k > kMaxExtensionDegree) {
    throw Error(ErrorKind::SizeLimit, "extension degree must lie in [1, 6], got " + std::to_string(k));
  }
  if (checked_power(p, k, kMaxEnumeratedOrder) > kMaxEnumeratedOrder) {
    throw Error(ErrorKind::SizeLimit, "field order p^k exceeds 2^20");
  }
  if (k == 1) return make_prime_field(p);
  const std::uint64_t candidates = checked_power(p, k, kMaxEnumeratedOrder);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    auto poly = monic_from_index(p, k, idx);
    if (is_irreducible(p, poly)) {
      const bool gaussian = k == 2 && poly == std::vector<std::uint32_t>{1, 0, 1};
      return unchecked_spec(p, std::move(poly), gaussian ? Construction::gaussian : Construction::general);
    }
  }
  // Irreducibles of every degree exist over every prime field.
  throw Error(ErrorKind::InvalidInput, "no irreducible polynomial found");
}

FieldElement::FieldElement(FieldRef spec, std::vector<std::uint32_t> coeffs) : spec_(std::move(spec)) {
  if (!spec_) throw Error(ErrorKind::InvalidInput, "null field spec");
  // Reduce modulo the defining polynomial so every element is canonical.
  Poly raw;
  raw.reserve(coeffs.size());
  for (auto c : coeffs) raw.push_back(c % spec_->p);
  trim(raw);
  if (raw.size() > spec_->k) {
    Poly quot;
    Poly rem;
    divmod(raw, to_poly(spec_->modulus), spec_->p, quot, rem);
    raw = std::move(rem);
  }
  coeffs_.assign(spec_->k, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) coeffs_[i] = static_cast<std::uint32_t>(raw[i]);
}

FieldElement FieldElement::zero(const FieldRef& spec) { return FieldElement(spec, {}); }

FieldElement FieldElement::one(const FieldRef& spec) { return FieldElement(spec, {1}); }

FieldElement FieldElement::from_int(const FieldRef& spec, std::int64_t value) {
  const std::int64_t p = spec->p;
  const std::int64_t r = ((value % p) + p) % p;
  return FieldElement(spec, {static_cast<std::uint32_t>(r)});
}

FieldElement FieldElement::from_index(const FieldRef& spec, std::uint64_t index) {
  if (index >= spec->order()) throw Error(ErrorKind::InvalidInput, "element index out of range");
  std::vector<std::uint32_t> c(spec->k, 0);
  for (auto& digit : c) {
    digit = static_cast<std::uint32_t>(index % spec->p);
    index /= spec->p;
  }
  return FieldElement(spec, std::move(c));
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) idx = idx * spec_->p + *it;
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  const std::string symbol = spec_->construction == Construction::gaussian ? "i" : "α";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.spec_ != b.spec_ && !(*a.spec_ == *b.spec_)) return false;
  return a.coeffs_ == b.coeffs_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  const std::uint32_t p = a.spec()->p;
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coeffs()[i]) % p;
  return FieldElement(a.spec(), std::move(c));
}

FieldElement neg(const FieldElement& a) {
  const std::uint32_t p = a.spec()->p;
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = (p - x) % p;
  return FieldElement(a.spec(), std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return add(a, neg(b));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  const std::uint64_t p = a.spec()->p;
  const Poly prod = poly_mul(to_poly(a.coeffs()), to_poly(b.coeffs()), p);
  std::vector<std::uint32_t> c(prod.begin(), prod.end());
  return FieldElement(a.spec(), std::move(c));
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative inverse");
  const std::uint64_t p = a.spec()->p;
  Poly r0 = to_poly(a.spec()->modulus);
  Poly r1 = to_poly(a.coeffs());
  Poly s0;
  Poly s1{1};
  Poly quot;
  Poly rem;
  while (!r1.empty()) {
    divmod(r0, r1, p, quot, rem);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw Error(ErrorKind::DivisionByZero, a.to_string() + " is a zero divisor in " + a.spec()->describe());
  }
  const std::uint64_t scale = inv_mod(r0[0], p);
  std::vector<std::uint32_t> c;
  c.reserve(s0.size());
  for (auto x : s0) c.push_back(static_cast<std::uint32_t>(x * scale % p));
  return FieldElement(a.spec(), std::move(c));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  FieldElement result = FieldElement::one(a.spec());
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement conj(const FieldElement& a) {
  const auto& spec = *a.spec();
  if (spec.k % 2 != 0) return a;
  if (spec.construction == Construction::gaussian) {
    return FieldElement(a.spec(), {a.coeffs()[0], (spec.p - a.coeffs()[1]) % spec.p});
  }
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < spec.k / 2; ++i) e *= spec.p;
  return pow(a, e);
}

std::vector<FieldElement> enumerate_elements(const FieldRef& spec) {
  const std::uint64_t q = spec->order();
  if (q > kMaxEnumeratedOrder) throw Error(ErrorKind::SizeLimit, "field order exceeds 2^20");
  std::vector<FieldElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(FieldElement::from_index(spec, i));
  return out;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Cayley tables for a finite ring with elements 0..n-1.
struct OperationTables {
  std::size_t n = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
  std::vector<std::string> labels;

  std::uint32_t plus(std::size_t a, std::size_t b) const { return add[a * n + b]; }
  std::uint32_t times(std::size_t a, std::size_t b) const { return mul[a * n + b]; }
};

OperationTables tables_for(const FieldRef& spec) {
  const auto elems = enumerate_elements(spec);
  OperationTables t;
  t.n = elems.size();
  t.add.resize(t.n * t.n);
  t.mul.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a) {
    t.labels.push_back(elems[a].to_string());
    for (std::size_t b = 0; b < t.n; ++b) {
      t.add[a * t.n + b] = static_cast<std::uint32_t>(add(elems[a], elems[b]).index());
      t.mul[a * t.n + b] = static_cast<std::uint32_t>(mul(elems[a], elems[b]).index());
    }
  }
  return t;
}

std::optional<std::size_t> find_identity(const OperationTables& t, bool multiplicative) {
  for (std::size_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < t.n && ok; ++a) {
      const auto r1 = multiplicative ? t.times(e, a) : t.plus(e, a);
      const auto r2 = multiplicative ? t.times(a, e) : t.plus(a, e);
      ok = r1 == a && r2 == a;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

AxiomReport check_tables(const OperationTables& t, std::string structure) {
  AxiomReport report;
  report.structure = std::move(structure);
  const auto& L = t.labels;
  const std::size_t n = t.n;

  AxiomCheck assoc{"associativity"};
  for (std::size_t a = 0; a < n && assoc.passed; ++a) {
    for (std::size_t b = 0; b < n && assoc.passed; ++b) {
      const auto ab_add = t.plus(a, b);
      const auto ab_mul = t.times(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (t.plus(ab_add, c) != t.plus(a, t.plus(b, c))) {
          assoc = {"associativity", false, "(" + L[a] + "+" + L[b] + ")+" + L[c]};
          break;
        }
        if (t.times(ab_mul, c) != t.times(a, t.times(b, c))) {
          assoc = {"associativity", false, "(" + L[a] + "*" + L[b] + ")*" + L[c]};
          break;
        }
      }
    }
  }
  report.checks.push_back(assoc);

  AxiomCheck comm{"commutativity"};
  for (std::size_t a = 0; a < n && comm.passed; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (t.plus(a, b) != t.plus(b, a) || t.times(a, b) != t.times(b, a)) {
        comm = {"commutativity", false, L[a] + "," + L[b]};
        break;
      }
    }
  }
  report.checks.push_back(comm);

  AxiomCheck dist{"distributivity"};
  for (std::size_t a = 0; a < n && dist.passed; ++a) {
    for (std::size_t b = 0; b < n && dist.passed; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.times(a, t.plus(b, c)) != t.plus(t.times(a, b), t.times(a, c))) {
          dist = {"distributivity", false, L[a] + "*(" + L[b] + "+" + L[c] + ")"};
          break;
        }
      }
    }
  }
  report.checks.push_back(dist);

  const auto zero = find_identity(t, false);
  const auto one = find_identity(t, true);
  AxiomCheck ident{"identities"};
  if (!zero) {
    ident = {"identities", false, "no additive identity"};
  } else if (!one) {
    ident = {"identities", false, "no multiplicative identity"};
  } else if (*zero == *one) {
    ident = {"identities", false, "0 = 1"};
  }
  report.checks.push_back(ident);

  AxiomCheck inverses{"inverses"};
  if (zero && one) {
    for (std::size_t a = 0; a < n && inverses.passed; ++a) {
      bool has_neg = false;
      bool has_recip = a == *zero;
      for (std::size_t b = 0; b < n; ++b) {
        has_neg = has_neg || t.plus(a, b) == *zero;
        has_recip = has_recip || t.times(a, b) == *one;
      }
      if (!has_neg || !has_recip) inverses = {"inverses", false, L[a]};
    }
  } else {
    inverses = {"inverses", false, "identities missing"};
  }
  report.checks.push_back(inverses);
  return report;
}

}  // namespace

AxiomReport verify_field_axioms(const FieldRef& spec) {
  if (spec->order() > kMaxAxiomCheckOrder) {
    throw Error(ErrorKind::SizeLimit, "exhaustive axiom check limited to order <= 500");
  }
  return check_tables(tables_for(spec), spec->describe());
}

AxiomReport verify_residue_ring_axioms(std::uint32_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "ring modulus must be >= 2");
  if (n > kMaxAxiomCheckOrder) {
    throw Error(ErrorKind::SizeLimit, "exhaustive axiom check limited to order <= 500");
  }
  OperationTables t;
  t.n = n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b) {
      t.add[a * n + b] = (a + b) % n;
      t.mul[a * n + b] = static_cast<std::uint32_t>(std::uint64_t{a} * b % n);
    }
  }
  return check_tables(t, "Z/" + std::to_string(n));
}

AxiomReport verify_gaussian_ring_axioms(std::uint32_t p) {
  require_prime(p);
  if (std::uint64_t{p} * p > kMaxAxiomCheckOrder) {
    throw Error(ErrorKind::SizeLimit, "exhaustive axiom check limited to order <= 500");
  }
  auto ring = unchecked_spec(p, {1, 0, 1}, Construction::gaussian);
  return check_tables(tables_for(ring), "E_" + std::to_string(p) + "[i]/(i^2+1)");
}

}  // namespace fgeo
