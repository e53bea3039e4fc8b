#pragma once

#include <optional>
#include <string>

#include "elliskernel/quadratic.hpp"

namespace elliskernel {

enum class KappaType { type1 = 1, type2 = 2, type3 = 3 };

/// Cut value kappa = (m*alpha + n)/k in lowest terms (gcd(m, n, k) = 1).
struct KappaCombination {
  long long m = 0;
  long long n = 0;
  long long k = 1;

  bool operator==(const KappaCombination&) const = default;
};

/// Parameters of a two-cut coding of the rotation by alpha; alpha must be
/// irrational.  A missing combination means the cut value is generic, i.e.
/// not in the rational span of alpha and 1.
class SturmianParams {
 public:
  static SturmianParams with_combination(QuadraticNumber alpha, long long m,
                                         long long n, long long k);
  static SturmianParams with_generic_kappa(QuadraticNumber alpha);

  const QuadraticNumber& alpha() const { return alpha_; }
  bool generic_kappa() const { return !combination_.has_value(); }
  const std::optional<KappaCombination>& combination() const { return combination_; }

  /// Exact cut value reduced mod 1; unavailable for generic kappa.
  QuadraticNumber kappa_value() const;

  bool operator==(const SturmianParams&) const = default;

 private:
  SturmianParams(QuadraticNumber alpha, std::optional<KappaCombination> c);

  QuadraticNumber alpha_;
  std::optional<KappaCombination> combination_;
};

KappaType classify_kappa(const SturmianParams& p);

enum class BoundarySign { plus, minus };

/// Exact evaluation of the coding on [lo, hi]: with the plus convention the
/// letter is 'a' iff 0 <= {n alpha + phi} < kappa, with the minus convention
/// iff 0 < {n alpha + phi} <= kappa.
std::string generate_word(const SturmianParams& p, const QuadraticNumber& phi,
                          BoundarySign sign, long long lo, long long hi);

struct EllisModel {
  unsigned idempotent_count = 2;
  QuadraticNumber rotation;
  std::string description;

  bool operator==(const EllisModel&) const = default;
};

EllisModel ellis_model(const SturmianParams& p);

struct LimitDescriptor {
  enum class Kind { bounded, from_above, from_below };
  Kind kind = Kind::bounded;
  long long n = 0;        // for bounded
  QuadraticNumber z;      // for one-sided convergence
};

struct LimitElement {
  std::string text;       // "sigma^n", "(p+, z)" or "(p-, z)"

  bool operator==(const LimitElement&) const = default;
};

LimitElement evaluate_limit(const SturmianParams& p, const LimitDescriptor& d);

enum class FactorVerdict { factor_exists, no_conclusion, different_rotation };

const char* factor_verdict_name(FactorVerdict v);

/// Whether a factor map from the system of `from` onto the system of `to`
/// is guaranteed: the target cut must be of type 1, or both cuts of type 2.
FactorVerdict factor_verdict(const SturmianParams& from, const SturmianParams& to);

}  // namespace elliskernel
