#include <cmath>
#include <vector>

#include "doctest.h"
#include "elliskernel/errors.hpp"
#include "elliskernel/quadratic.hpp"

using namespace elliskernel;

namespace {

QuadraticNumber golden_conjugate() {
  // (3 - sqrt(5)) / 2, the fractional part of (1 - sqrt(5)) / 2
  return QuadraticNumber(3, -1, 2, 5);
}

double approx(const QuadraticNumber& x) {
  return (static_cast<double>(x.p()) +
          static_cast<double>(x.q()) * std::sqrt(static_cast<double>(x.d()))) /
         static_cast<double>(x.r());
}

}  // namespace

TEST_CASE("normalization") {
  // Square factors leave the radicand, rationals collapse to d = 1.
  QuadraticNumber x(0, 1, 1, 12);  // sqrt(12) = 2 sqrt(3)
  CHECK(x.d() == 3);
  CHECK(x.q() == 2);

  QuadraticNumber y(2, 3, 1, 4);  // 2 + 3*2 = 8
  CHECK(y.is_rational());
  CHECK(y.p() == 8);

  QuadraticNumber z(2, 0, -4, 7);  // sign moves to the numerator
  CHECK(z.r() == 2);
  CHECK(z.p() == -1);
  CHECK(z.d() == 1);
}

TEST_CASE("field arithmetic laws on a sample grid") {
  std::vector<QuadraticNumber> grid;
  for (long long p = -2; p <= 2; ++p) {
    for (long long q = -2; q <= 2; ++q) {
      for (long long r = 1; r <= 3; ++r) {
        grid.push_back(QuadraticNumber(p, q, r, 5));
      }
    }
  }
  for (const QuadraticNumber& x : grid) {
    for (const QuadraticNumber& y : grid) {
      CHECK(x + y == y + x);
      CHECK((x + y) - y == x);
      CHECK(x * y == y * x);
      if (!y.is_zero()) {
        CHECK((x / y) * y == x);
      }
      // Exact comparisons agree with the floating approximation away from
      // near-ties.
      double dx = approx(x), dy = approx(y);
      if (std::abs(dx - dy) > 1e-9) {
        CHECK((x < y) == (dx < dy));
      }
    }
  }
}

TEST_CASE("sign is decided exactly at a tie") {
  // 3/2 vs sqrt(5)/2 + tiny offsets: p^2 vs q^2 d comparisons.
  QuadraticNumber a(3, -1, 2, 5);  // positive, approx 0.382
  CHECK(a.sign() == 1);
  QuadraticNumber b(2, -1, 1, 5);  // 2 - sqrt(5) < 0
  CHECK(b.sign() == -1);
  QuadraticNumber c(-2, 1, 1, 5);
  CHECK(c.sign() == 1);
  CHECK(QuadraticNumber(0, 0, 3, 1).sign() == 0);
}

TEST_CASE("floor and fractional part") {
  QuadraticNumber sqrt5 = QuadraticNumber::sqrt_of(5);
  CHECK(sqrt5.floor_value() == 2);
  CHECK((-sqrt5).floor_value() == -3);
  CHECK(QuadraticNumber::from_rational(7, 2).floor_value() == 3);
  CHECK(QuadraticNumber::from_rational(-7, 2).floor_value() == -4);
  CHECK(QuadraticNumber::from_rational(-6, 2).floor_value() == -3);

  QuadraticNumber alpha = golden_conjugate();
  for (long long n = -50; n <= 50; ++n) {
    QuadraticNumber x = alpha * QuadraticNumber::from_rational(n);
    QuadraticNumber f = x.frac();
    CHECK(f.sign() >= 0);
    CHECK((f - QuadraticNumber::from_rational(1)).sign() < 0);
    double err = approx(f) - (approx(x) - std::floor(approx(x)));
    CHECK(std::abs(err) < 1e-6);
  }
}

TEST_CASE("field mismatch is reported") {
  QuadraticNumber a = QuadraticNumber::sqrt_of(5);
  QuadraticNumber b = QuadraticNumber::sqrt_of(3);
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == errc::field_mismatch);
  }
  // Rationals embed into every field.
  CHECK((a + QuadraticNumber::from_rational(1, 2)).d() == 5);
}

TEST_CASE("string rendering") {
  CHECK(QuadraticNumber::from_rational(3, 2).str() == "3/2");
  CHECK(QuadraticNumber(3, -1, 2, 5).str() == "(3-sqrt(5))/2");
  CHECK(QuadraticNumber::sqrt_of(5).str() == "0+sqrt(5)");
}
