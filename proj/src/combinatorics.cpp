#include "qdent/combinatorics.hpp"

#include <ostream>

#include "qdent/errors.hpp"

namespace qdent {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (sgn(denominator) == 0) throw DomainError("ExactRational: zero denominator");
  value_.canonicalize();
}

long double ExactRational::to_long_double() const {
  const double hi = value_.get_d();
  const mpq_class rest = value_ - mpq_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

ExactRational ExactRational::abs() const {
  ExactRational r;
  r.value_ = ::abs(value_);
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational operator-(const ExactRational& x) {
  ExactRational r;
  r.value_ = -x.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

BigInt binomial(std::int64_t x, std::int64_t y) {
  if (x < 0) throw DomainError("binomial: negative upper index " + std::to_string(x));
  if (y < 0 || y > x) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(y));
  return r;
}

BigInt double_factorial(std::int64_t x) {
  if (x < -1) throw DomainError("double_factorial: argument below -1: " + std::to_string(x));
  if (x <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
  return r;
}

BigInt factorial(std::int64_t x) {
  if (x < 0) throw DomainError("factorial: negative argument " + std::to_string(x));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
  return r;
}

}  // namespace qdent
