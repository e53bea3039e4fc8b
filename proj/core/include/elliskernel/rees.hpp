#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elliskernel/group_table.hpp"

namespace elliskernel {

/// A Rees matrix semigroup M[G; I, Lambda; A]: the set I x G x Lambda with
/// product (i,g,l)(j,h,m) = (i, g a_{l j} h, m).  The sandwich matrix is
/// stored row-major as Lambda x I with entries in the structure group.
struct ReesPresentation {
  GroupTable group;
  std::vector<std::string> row_labels;  // Lambda
  std::vector<std::string> col_labels;  // I
  std::vector<std::vector<std::uint16_t>> sandwich;

  std::uint16_t entry(std::size_t row, std::size_t col) const {
    return sandwich[row][col];
  }
};

struct ReesElement {
  std::uint16_t col;  // i in I
  std::uint16_t g;
  std::uint16_t row;  // lambda

  auto operator<=>(const ReesElement&) const = default;
};

class ReesSemigroup {
 public:
  explicit ReesSemigroup(ReesPresentation p);

  const ReesPresentation& presentation() const { return p_; }
  const std::vector<ReesElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  ReesElement product(const ReesElement& x, const ReesElement& y) const;
  bool is_idempotent(const ReesElement& x) const;

 private:
  ReesPresentation p_;
  std::vector<ReesElement> elements_;
};

/// All |I|*|G|*|Lambda| triples with the multiplication oracle.
ReesSemigroup enumerate(const ReesPresentation& p);

/// Exactly the triples (i, a_{lambda i}^{-1}, lambda).
std::vector<ReesElement> idempotents_of(const ReesPresentation& p);

/// Subgroup of the structure group generated by the sandwich entries.
std::vector<std::uint16_t> little_structure_group(const ReesPresentation& p);

/// Whether the idempotents form a subsemigroup.
bool is_orthodox(const ReesPresentation& p);

/// Isomorphism witness: a'_{row_map[l], col_map[i]} = v[l] * theta(a_{l i}) * u[i].
struct ReesIsoWitness {
  std::vector<std::uint16_t> group_map;  // theta, indexed by P's elements
  std::vector<std::uint16_t> col_map;    // psi: P cols -> Q cols
  std::vector<std::uint16_t> row_map;    // chi: P rows -> Q rows
  std::vector<std::uint16_t> u;          // per P col, in Q's group
  std::vector<std::uint16_t> v;          // per P row, in Q's group
};

struct ReesIsoResult {
  bool isomorphic = false;
  std::optional<ReesIsoWitness> witness;
};

/// Decides isomorphism of two finite Rees matrix semigroups by brute force
/// over group isomorphisms and index bijections, after normalizing the first
/// row and column of the sandwich matrix to the identity.  Errors with
/// too_large when the search space exceeds `budget` candidates.
ReesIsoResult is_isomorphic(const ReesPresentation& p, const ReesPresentation& q,
                            std::size_t budget = 10'000'000);

bool verify_witness(const ReesPresentation& p, const ReesPresentation& q,
                    const ReesIsoWitness& w);

/// The smallest non-orthodox matrix semigroup: G = S_2, 2x2 sandwich
/// ((e,e),(e,t)); 8 elements, 4 idempotents.
ReesPresentation m2_example();

}  // namespace elliskernel
