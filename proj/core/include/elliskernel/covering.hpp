#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elliskernel/group_table.hpp"
#include "elliskernel/substitution.hpp"

namespace elliskernel {

/// Group labeling of the letters; extends multiplicatively to words.
struct Cocycle {
  std::vector<std::uint16_t> assignment;  // per letter, a group element

  bool operator==(const Cocycle&) const = default;
};

bool is_cocycle(const Substitution& s, const GroupTable& g, const Cocycle& q);

/// All labelings with q(theta(a)) = q(a) for every letter, by exhaustive
/// search with prefix pruning.  Includes the trivial labeling.
std::vector<Cocycle> solve_cocycles(const Substitution& s, const GroupTable& g);

std::uint16_t cocycle_of_word(const GroupTable& g, const Cocycle& q, const Word& w);

struct LiftedLetter {
  Letter base;
  std::uint16_t g;
};

/// The skew-product substitution on alphabet A x G; no cocycle validation.
/// Lifted letters get synthetic single-character names; `legend` maps them
/// back to (base letter, group element).
Substitution lift_substitution(const Substitution& s, const GroupTable& g,
                               const Cocycle& q,
                               std::vector<LiftedLetter>* legend = nullptr);

struct CoverResult {
  Substitution base;
  Substitution lifted;
  std::vector<LiftedLetter> legend;
  GroupTable group;
  Cocycle q;
  bool nontrivial = false;
  std::vector<std::uint16_t> omega_values;  // one per asymptotic pair
  std::optional<unsigned> omega_order;      // k
  std::optional<unsigned> created_height;   // |G| / k
  std::optional<unsigned> cr_lifted;        // cr_base * k
};

/// Validates the cocycle, builds the lift, and tests primitivity.
CoverResult build_cover(const Substitution& s, const GroupTable& g, const Cocycle& q);

using WordPair = std::pair<Word, Word>;

/// Bi-asymptotic disagreement word pairs, found by common-context search in
/// the language: (w+, w-) is reported when some context P.S of radius
/// `window` allows both P w+ S and P w- S.  Pairs are normalized by
/// stripping shared end letters and ordering the two words.
std::vector<WordPair> asymptotic_pair_words(const Substitution& s,
                                            std::size_t window,
                                            std::size_t max_disagreement = 3);

/// Checks a user-supplied pair the same way; errors with window_exceeded
/// when the disagreement does not close within the window.
void verify_asymptotic_pair(const Substitution& s, const WordPair& pair,
                            std::size_t window);

std::size_t default_pair_window(const Substitution& s);

/// Fills in omega, k, created height and (when cr_base is known) the lifted
/// coincidence rank, under the convention that the Barge-Diamond lower bound
/// for the lifted rank is attained.
void cover_invariants(CoverResult& c, const std::vector<WordPair>& pairs,
                      std::optional<unsigned> cr_base);

}  // namespace elliskernel
