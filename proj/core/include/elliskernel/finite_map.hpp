#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace elliskernel {

/// A total self-map of {0, ..., n-1}, stored as its value table.
///
/// Throughout the library the product `fg` of two maps means "apply g first,
/// then f", i.e. (fg)(x) = f(g(x)).  Green's relations, sandwich matrices and
/// every fixed expected value depend on this convention; it is asserted by a
/// dedicated convention test.
class FiniteMap {
 public:
  FiniteMap() = default;
  explicit FiniteMap(std::vector<std::uint8_t> table);

  static FiniteMap identity(std::size_t n);

  std::size_t degree() const { return table_.size(); }
  std::uint8_t operator()(std::uint8_t x) const { return table_[x]; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  /// this ∘ g, apply g first.
  FiniteMap after(const FiniteMap& g) const;

  std::size_t rank() const;
  std::vector<std::uint8_t> image() const;  // sorted, distinct
  bool is_idempotent() const;
  bool is_permutation() const { return rank() == degree(); }

  /// Canonical kernel signature: position i holds the index of the first
  /// element equivalent to i.  Two maps have equal partitions iff the
  /// signatures are equal.
  std::vector<std::uint8_t> kernel_signature() const;

  auto operator<=>(const FiniteMap&) const = default;

 private:
  std::vector<std::uint8_t> table_;
};

/// Product in the fixed convention: compose(f, g) = f ∘ g (apply g first).
inline FiniteMap compose(const FiniteMap& f, const FiniteMap& g) {
  return f.after(g);
}

/// The unique idempotent power of f.
FiniteMap omega_power(const FiniteMap& f);

/// Tail length and eventual period of the sequence f, f^2, f^3, ...
struct IterationProfile {
  unsigned tail;    // least t >= 1 with f^t in the cycle
  unsigned period;  // least p >= 1 with f^(t+p) = f^t
};
IterationProfile iteration_profile(const FiniteMap& f);

}  // namespace elliskernel
