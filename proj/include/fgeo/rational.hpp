#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace fgeo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
class RationalNumber {
 public:
  RationalNumber() = default;
  RationalNumber(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  RationalNumber(BigInt num, BigInt den);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  double to_double() const;
  std::string to_string() const;

  RationalNumber operator-() const;
  RationalNumber& operator+=(const RationalNumber& rhs);
  RationalNumber& operator-=(const RationalNumber& rhs);
  RationalNumber& operator*=(const RationalNumber& rhs);
  RationalNumber& operator/=(const RationalNumber& rhs);

  friend RationalNumber operator+(RationalNumber a, const RationalNumber& b) { return a += b; }
  friend RationalNumber operator-(RationalNumber a, const RationalNumber& b) { return a -= b; }
  friend RationalNumber operator*(RationalNumber a, const RationalNumber& b) { return a *= b; }
  friend RationalNumber operator/(RationalNumber a, const RationalNumber& b) { return a /= b; }

  friend bool operator==(const RationalNumber& a, const RationalNumber& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalNumber& a, const RationalNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const RationalNumber& r) {
    return os << r.to_string();
  }

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace fgeo
