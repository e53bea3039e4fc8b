#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "elliskernel/finite_map.hpp"

namespace elliskernel {

/// A finite transformation semigroup, closed under composition.  Elements
/// carry their breadth-first discovery index; every set-valued result in the
/// library is emitted in this order.
class TransformationSemigroup {
 public:
  static TransformationSemigroup close(const std::vector<FiniteMap>& generators);

  std::size_t size() const { return elements_.size(); }
  const std::vector<FiniteMap>& elements() const { return elements_; }
  const std::vector<FiniteMap>& generators() const { return generators_; }

  bool contains(const FiniteMap& f) const;
  std::uint32_t index_of(const FiniteMap& f) const;  // throws if absent

  /// Index of elements()[i] ∘ elements()[j] (apply j first).
  std::uint32_t product(std::uint32_t i, std::uint32_t j) const {
    return product_[i][j];
  }

  std::size_t min_rank() const;

 private:
  std::vector<FiniteMap> elements_;
  std::vector<FiniteMap> generators_;
  std::vector<std::vector<std::uint32_t>> product_;
};

std::vector<FiniteMap> idempotents(const TransformationSemigroup& S);

/// Maximal subgroup at a minimal-rank idempotent e: all elements with the
/// image and kernel of e.
struct HClassGroup {
  FiniteMap identity;
  std::vector<FiniteMap> members;  // discovery order

  bool contains(const FiniteMap& f) const;
  const FiniteMap& inverse_of(const FiniteMap& f) const;
};

HClassGroup h_class_group(const TransformationSemigroup& S, const FiniteMap& e);

/// Elements of S with the given image (of e_im) and kernel (of e_ker).
std::vector<FiniteMap> h_class_members(const TransformationSemigroup& S,
                                       const FiniteMap& e_im,
                                       const FiniteMap& e_ker);

/// The unique idempotent with image im(e_from) and kernel ker(e_to).
FiniteMap corner_idempotent(const TransformationSemigroup& S,
                            const FiniteMap& e_from, const FiniteMap& e_to);

/// All consecutive column pairs ((theta^n)_{i-1}, (theta^n)_i) over every
/// power n, computed as a least fixed point instead of enumerating powers.
struct ConsecutivePairSet {
  std::vector<std::pair<FiniteMap, FiniteMap>> pairs;

  bool contains(const FiniteMap& l, const FiniteMap& r) const;
};

ConsecutivePairSet consecutive_pairs(const std::vector<FiniteMap>& columns);

/// Smallest subgroup of G containing all conjugates of elements of H.
std::vector<FiniteMap> normal_closure(const HClassGroup& G,
                                      const std::vector<FiniteMap>& H);

}  // namespace elliskernel
