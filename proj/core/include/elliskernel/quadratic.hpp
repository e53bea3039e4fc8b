#pragma once

#include <cstdint>
#include <string>

namespace elliskernel {

/// Exact element of a real quadratic field: (p + q*sqrt(d)) / r with r > 0,
/// d squarefree, gcd(p, q, r) = 1, and q = 0 canonicalized to d = 1 (so
/// rationals embed in every field).  Comparisons are exact sign decisions.
class QuadraticNumber {
 public:
  QuadraticNumber() : p_(0), q_(0), r_(1), d_(1) {}
  QuadraticNumber(long long p, long long q, long long r, long long d);

  static QuadraticNumber from_rational(long long num, long long den = 1);
  static QuadraticNumber sqrt_of(long long d);

  long long p() const { return p_; }
  long long q() const { return q_; }
  long long r() const { return r_; }
  long long d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  int sign() const;

  QuadraticNumber operator-() const;
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  QuadraticNumber operator/(const QuadraticNumber& o) const;

  bool operator==(const QuadraticNumber& o) const;
  bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }
  bool operator<(const QuadraticNumber& o) const;
  bool operator<=(const QuadraticNumber& o) const;
  bool operator>(const QuadraticNumber& o) const { return o < *this; }
  bool operator>=(const QuadraticNumber& o) const { return o <= *this; }

  long long floor_value() const;
  QuadraticNumber frac() const;  // this - floor, in [0, 1)

  std::string str() const;

 private:
  void normalize();

  long long p_, q_, r_, d_;
};

}  // namespace elliskernel
