#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elliskernel/transformation_semigroup.hpp"

namespace elliskernel {

/// A finite group given by its multiplication table.  Group axioms are
/// validated at construction.
class GroupTable {
 public:
  GroupTable() : GroupTable({"e"}, {{0}}, 0) {}  // trivial group
  GroupTable(std::vector<std::string> names,
             std::vector<std::vector<std::uint16_t>> table,
             std::uint16_t identity);

  static GroupTable cyclic(unsigned n);
  static GroupTable symmetric(unsigned n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  static GroupTable from_h_class(const HClassGroup& h,
                                 const std::function<std::string(const FiniteMap&)>& name);

  std::size_t size() const { return table_.size(); }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a][b]; }
  std::uint16_t inverse(std::uint16_t a) const { return inverse_[a]; }
  std::uint16_t identity() const { return identity_; }
  unsigned element_order(std::uint16_t a) const;
  const std::string& name(std::uint16_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::uint16_t>>& table() const { return table_; }
  std::optional<std::uint16_t> index_of_name(const std::string& n) const;

  std::vector<std::uint16_t> subgroup_closure(std::vector<std::uint16_t> gens) const;
  std::vector<std::uint16_t> normal_closure(const std::vector<std::uint16_t>& subset) const;

  /// Deterministic minimal generating sequence (greedy by index).
  std::vector<std::uint16_t> generating_sequence() const;

  /// Enumerate isomorphisms onto `other` via generator-image backtracking
  /// with order-profile pruning.  The visitor receives the full element map
  /// and may return true to stop the search.  Returns whether the visitor
  /// stopped it.
  bool for_each_isomorphism(
      const GroupTable& other,
      const std::function<bool(const std::vector<std::uint16_t>&)>& visit) const;

  bool isomorphic_to(const GroupTable& other) const;

  auto operator<=>(const GroupTable&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint16_t>> table_;
  std::vector<std::uint16_t> inverse_;
  std::uint16_t identity_ = 0;
};

}  // namespace elliskernel
