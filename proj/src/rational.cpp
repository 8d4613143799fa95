#include "fgeo/rational.hpp"

#include "fgeo/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace fgeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::MalformedStructure: return "MalformedStructure";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::RangeLimit: return "RangeLimit";
    case ErrorKind::CurvatureUnsupported: return "CurvatureUnsupported";
    case ErrorKind::NonPositiveScaleFactor: return "NonPositiveScaleFactor";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
  }
  return "Unknown";
}

RationalNumber::RationalNumber(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  normalize();
}

void RationalNumber::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

double RationalNumber::to_double() const {
  using boost::multiprecision::cpp_bin_float_quad;
  cpp_bin_float_quad q = cpp_bin_float_quad(num_) / cpp_bin_float_quad(den_);
  return q.convert_to<double>();
}

std::string RationalNumber::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

RationalNumber RationalNumber::operator-() const {
  RationalNumber r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalNumber& RationalNumber::operator+=(const RationalNumber& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalNumber& RationalNumber::operator-=(const RationalNumber& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalNumber& RationalNumber::operator*=(const RationalNumber& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalNumber& RationalNumber::operator/=(const RationalNumber& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const RationalNumber& a, const RationalNumber& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fgeo
