#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace qdent {

using BigInt = mpz_class;

// Arbitrary-precision signed rational, always kept in lowest terms with a
// positive denominator. Zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
  explicit ExactRational(const BigInt& value) : value_(value) {}
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  // Rounded to long double through a double-double split, so the result keeps
  // more than the 53 bits mpq_get_d provides.
  long double to_long_double() const;
  std::string to_string() const { return value_.get_str(); }

  ExactRational abs() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  friend ExactRational operator-(const ExactRational& x);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

// Binomial coefficient with the out-of-range convention: 0 when y < 0 or
// y > x. Throws DomainError for x < 0.
BigInt binomial(std::int64_t x, std::int64_t y);

// x!! with (-1)!! = 0!! = 1. Throws DomainError for x < -1.
BigInt double_factorial(std::int64_t x);

BigInt factorial(std::int64_t x);

}  // namespace qdent
