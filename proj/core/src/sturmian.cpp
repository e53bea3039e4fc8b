#include "elliskernel/sturmian.hpp"

#include <numeric>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

SturmianParams::SturmianParams(QuadraticNumber alpha,
                               std::optional<KappaCombination> c)
    : alpha_(std::move(alpha)), combination_(std::move(c)) {
  if (alpha_.is_rational()) {
    throw std::invalid_argument("SturmianParams: the rotation must be irrational");
  }
}

SturmianParams SturmianParams::with_combination(QuadraticNumber alpha,
                                                long long m, long long n,
                                                long long k) {
  if (k <= 0) {
    throw std::invalid_argument("SturmianParams: k must be positive");
  }
  long long g = std::gcd(std::gcd(m < 0 ? -m : m, n < 0 ? -n : n), k);
  if (g > 1) {
    m /= g;
    n /= g;
    k /= g;
  }
  SturmianParams p(std::move(alpha), KappaCombination{m, n, k});
  if (p.kappa_value().is_zero()) {
    throw std::invalid_argument("SturmianParams: kappa must lie in (0, 1)");
  }
  return p;
}

SturmianParams SturmianParams::with_generic_kappa(QuadraticNumber alpha) {
  return SturmianParams(std::move(alpha), std::nullopt);
}

QuadraticNumber SturmianParams::kappa_value() const {
  if (!combination_) {
    fail(errc::field_mismatch,
         "generic cut value has no exact representative in the field");
  }
  QuadraticNumber v = (alpha_ * QuadraticNumber::from_rational(combination_->m) +
                       QuadraticNumber::from_rational(combination_->n)) /
                      QuadraticNumber::from_rational(combination_->k);
  return v.frac();
}

KappaType classify_kappa(const SturmianParams& p) {
  if (p.generic_kappa()) {
    return KappaType::type3;
  }
  // With gcd(m, n, k) = 1 and alpha irrational, kappa lies in the integer
  // span of alpha and 1 iff k = 1, and in the half-integer span iff k <= 2.
  switch (p.combination()->k) {
    case 1:
      return KappaType::type1;
    case 2:
      return KappaType::type2;
    default:
      return KappaType::type3;
  }
}

std::string generate_word(const SturmianParams& p, const QuadraticNumber& phi,
                          BoundarySign sign, long long lo, long long hi) {
  if (lo > hi) {
    throw std::invalid_argument("generate_word: empty range");
  }
  QuadraticNumber kappa = p.kappa_value();
  std::string out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) {
    QuadraticNumber t =
        (p.alpha() * QuadraticNumber::from_rational(n) + phi).frac();
    bool is_a;
    if (sign == BoundarySign::plus) {
      is_a = t < kappa;  // 0 <= t always holds for a fractional part
    } else {
      is_a = t.sign() > 0 && t <= kappa;
    }
    out += is_a ? 'a' : 'b';
  }
  return out;
}

EllisModel ellis_model(const SturmianParams& p) {
  EllisModel m;
  m.idempotent_count = 2;
  m.rotation = p.alpha().frac();
  m.description =
      "Z + (LZ_2 x S^1) with sigma^n (p, z) = (p, z + n*alpha) and "
      "(p, z)(q, w) = (p, z + w); the model depends only on alpha";
  return m;
}

LimitElement evaluate_limit(const SturmianParams& p, const LimitDescriptor& d) {
  if (d.kind != LimitDescriptor::Kind::bounded && !d.z.is_rational() &&
      d.z.d() != p.alpha().d()) {
    fail(errc::field_mismatch,
         "evaluate_limit: the limit point lies outside the parameter field");
  }
  switch (d.kind) {
    case LimitDescriptor::Kind::bounded:
      return LimitElement{"sigma^" + std::to_string(d.n)};
    case LimitDescriptor::Kind::from_above:
      return LimitElement{"(p+, " + d.z.frac().str() + ")"};
    case LimitDescriptor::Kind::from_below:
      return LimitElement{"(p-, " + d.z.frac().str() + ")"};
  }
  throw std::logic_error("evaluate_limit: bad descriptor");
}

const char* factor_verdict_name(FactorVerdict v) {
  switch (v) {
    case FactorVerdict::factor_exists:
      return "FactorExists";
    case FactorVerdict::no_conclusion:
      return "NoConclusion";
    case FactorVerdict::different_rotation:
      return "DifferentRotation";
  }
  return "?";
}

FactorVerdict factor_verdict(const SturmianParams& from, const SturmianParams& to) {
  if (from.alpha().frac() != to.alpha().frac()) {
    return FactorVerdict::different_rotation;
  }
  KappaType kf = classify_kappa(from);
  KappaType kt = classify_kappa(to);
  if (kt == KappaType::type1) {
    return FactorVerdict::factor_exists;
  }
  if (kf == KappaType::type2 && kt == KappaType::type2) {
    return FactorVerdict::factor_exists;
  }
  return FactorVerdict::no_conclusion;
}

}  // namespace elliskernel
