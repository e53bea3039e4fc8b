#include "elliskernel/quadratic.hpp"

#include <numeric>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

namespace {

using I128 = __int128;

long long checked(I128 v, const char* what) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2) {
    fail(errc::too_large, std::string("quadratic arithmetic overflow in ") + what);
  }
  return static_cast<long long>(v);
}

unsigned long long isqrt_u128(unsigned __int128 n) {
  if (n == 0) {
    return 0;
  }
  unsigned __int128 x = n;
  unsigned __int128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return static_cast<unsigned long long>(x);
}

int sgn_ll(I128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

QuadraticNumber::QuadraticNumber(long long p, long long q, long long r, long long d)
    : p_(p), q_(q), r_(r), d_(d) {
  if (r_ == 0) {
    throw std::invalid_argument("QuadraticNumber: zero denominator");
  }
  if (d_ < 1) {
    throw std::invalid_argument("QuadraticNumber: radicand must be positive");
  }
  normalize();
}

QuadraticNumber QuadraticNumber::from_rational(long long num, long long den) {
  return QuadraticNumber(num, 0, den, 1);
}

QuadraticNumber QuadraticNumber::sqrt_of(long long d) {
  return QuadraticNumber(0, 1, 1, d);
}

void QuadraticNumber::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  // Pull square factors out of the radicand.
  for (long long f = 2; f * f <= d_; ++f) {
    while (d_ % (f * f) == 0) {
      d_ /= f * f;
      q_ = checked(static_cast<I128>(q_) * f, "normalize");
    }
  }
  if (d_ == 1) {
    p_ = checked(static_cast<I128>(p_) + q_, "normalize");
    q_ = 0;
  }
  if (q_ == 0) {
    d_ = 1;
  }
  long long g = std::gcd(std::gcd(p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

namespace {

// Common radicand for a binary operation; rationals live in every field.
long long merge_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.is_rational()) {
    return b.d();
  }
  if (b.is_rational()) {
    return a.d();
  }
  if (a.d() != b.d()) {
    fail(errc::field_mismatch,
         "operands lie in different quadratic fields (sqrt(" +
             std::to_string(a.d()) + ") vs sqrt(" + std::to_string(b.d()) + "))");
  }
  return a.d();
}

}  // namespace

int QuadraticNumber::sign() const {
  if (q_ == 0) {
    return sgn_ll(p_);
  }
  if (p_ == 0) {
    return sgn_ll(q_);
  }
  if (p_ > 0 && q_ > 0) {
    return 1;
  }
  if (p_ < 0 && q_ < 0) {
    return -1;
  }
  I128 lhs = static_cast<I128>(p_) * p_;
  I128 rhs = static_cast<I128>(q_) * q_ * d_;
  int cmp = lhs > rhs ? 1 : lhs < rhs ? -1 : 0;  // |p| vs |q| sqrt(d)
  return p_ > 0 ? cmp : -cmp;
}

QuadraticNumber QuadraticNumber::operator-() const {
  return QuadraticNumber(-p_, -q_, r_, d_);
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  long long d = merge_radicand(*this, o);
  I128 p = static_cast<I128>(p_) * o.r_ + static_cast<I128>(o.p_) * r_;
  I128 q = static_cast<I128>(q_) * o.r_ + static_cast<I128>(o.q_) * r_;
  I128 r = static_cast<I128>(r_) * o.r_;
  return QuadraticNumber(checked(p, "+"), checked(q, "+"), checked(r, "+"), d);
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
  return *this + (-o);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  long long d = merge_radicand(*this, o);
  I128 p = static_cast<I128>(p_) * o.p_ + static_cast<I128>(q_) * o.q_ * d;
  I128 q = static_cast<I128>(p_) * o.q_ + static_cast<I128>(q_) * o.p_;
  I128 r = static_cast<I128>(r_) * o.r_;
  return QuadraticNumber(checked(p, "*"), checked(q, "*"), checked(r, "*"), d);
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
  if (o.is_zero()) {
    throw std::invalid_argument("QuadraticNumber: division by zero");
  }
  long long d = merge_radicand(*this, o);
  // 1/((p + q sqrt(d))/r) = r (p - q sqrt(d)) / (p^2 - q^2 d)
  I128 norm = static_cast<I128>(o.p_) * o.p_ - static_cast<I128>(o.q_) * o.q_ * d;
  QuadraticNumber inv(checked(static_cast<I128>(o.r_) * o.p_, "/"),
                      checked(-static_cast<I128>(o.r_) * o.q_, "/"),
                      checked(norm, "/"), d);
  return *this * inv;
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
  return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
}

bool QuadraticNumber::operator<(const QuadraticNumber& o) const {
  return (*this - o).sign() < 0;
}

bool QuadraticNumber::operator<=(const QuadraticNumber& o) const {
  return (*this - o).sign() <= 0;
}

long long QuadraticNumber::floor_value() const {
  // Start near floor((p + q sqrt(d))/r) using an integer square root, then
  // correct by exact sign checks.
  I128 s = static_cast<I128>(
      isqrt_u128(static_cast<unsigned __int128>(static_cast<I128>(q_) * q_) *
                 static_cast<unsigned __int128>(d_)));
  I128 num = p_ + (q_ >= 0 ? s : -s - 1);
  I128 c = num >= 0 ? num / r_ : -((-num + r_ - 1) / r_);
  long long cand = checked(c, "floor");
  QuadraticNumber x = *this;
  while ((x - from_rational(cand + 1)).sign() >= 0) {
    ++cand;
  }
  while ((x - from_rational(cand)).sign() < 0) {
    --cand;
  }
  return cand;
}

QuadraticNumber QuadraticNumber::frac() const {
  return *this - from_rational(floor_value());
}

std::string QuadraticNumber::str() const {
  if (is_rational()) {
    return r_ == 1 ? std::to_string(p_)
                   : std::to_string(p_) + "/" + std::to_string(r_);
  }
  std::string num = std::to_string(p_);
  num += q_ >= 0 ? "+" : "-";
  long long aq = q_ < 0 ? -q_ : q_;
  if (aq != 1) {
    num += std::to_string(aq) + "*";
  }
  num += "sqrt(" + std::to_string(d_) + ")";
  if (r_ == 1) {
    return num;
  }
  return "(" + num + ")/" + std::to_string(r_);
}

}  // namespace elliskernel
