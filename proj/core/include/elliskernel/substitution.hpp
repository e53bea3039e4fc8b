#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elliskernel/finite_map.hpp"

namespace elliskernel {

/// Letters are indices into the owning substitution's alphabet, in
/// declaration order.  Words store one letter index per byte.
using Letter = std::uint8_t;
using Word = std::string;

/// Seed of a two-sided fixed point: the two-letter word left.right sitting
/// astride the origin.
struct Seed {
  Letter left;
  Letter right;
  auto operator<=>(const Seed&) const = default;
};

class Substitution {
 public:
  /// Alphabet letters are single characters; rules map letter index to the
  /// image word.  Every image must be nonempty and use declared letters only.
  Substitution(std::vector<char> alphabet, std::vector<Word> rules);

  /// Convenience constructor from printable rule strings, e.g.
  /// `{"ab", "ba"}` over alphabet `{'a', 'b'}`.
  static Substitution from_strings(const std::vector<char>& alphabet,
                                   const std::vector<std::string>& rule_texts);

  std::size_t alphabet_size() const { return alphabet_.size(); }
  char letter_name(Letter a) const { return alphabet_[a]; }
  const std::vector<char>& alphabet() const { return alphabet_; }
  std::optional<Letter> letter_index(char name) const;

  const Word& rule(Letter a) const { return rules_[a]; }
  const std::vector<Word>& rules() const { return rules_; }

  /// Present iff all images share one length.
  std::optional<std::size_t> length() const { return length_; }

  Word apply(const Word& w) const;
  Substitution power(unsigned n) const;  // n >= 1

  Word parse_word(const std::string& text) const;
  std::string render(const Word& w) const;
  std::string render(const Seed& s) const;

  auto operator<=>(const Substitution&) const = default;

 private:
  std::vector<char> alphabet_;
  std::vector<Word> rules_;
  std::optional<std::size_t> length_;
};

/// The column maps of a constant-length substitution:
/// theta(a) = theta_0(a) ... theta_{l-1}(a).
std::vector<FiniteMap> expand_columns(const Substitution& s);

/// Rebuild a substitution from column maps (inverse of expand_columns).
Substitution assemble_columns(const std::vector<char>& alphabet,
                              const std::vector<FiniteMap>& columns);

/// Column maps of the composition "f after g": entry at index i*l+j is
/// f_j ∘ g_i (apply g_i first), where l is f's column count.
std::vector<FiniteMap> compose_expansion(const std::vector<FiniteMap>& f,
                                         const std::vector<FiniteMap>& g);

/// Exactly the allowed words of length n.  Requires s primitive.
std::set<Word> language(const Substitution& s, std::size_t n);

bool is_primitive(const Substitution& s);

/// Morse-Hedlund test: true if the factor complexity satisfies p(n) > n for
/// all n <= bound.  A "false" answer is exact; a "true" answer is exact once
/// bound passes the documented default.  Requires s primitive.
bool is_aperiodic(const Substitution& s, std::size_t bound);

std::size_t default_aperiodicity_bound(const Substitution& s);

/// Dekking's height, computed from return positions of the first letter on a
/// one-sided fixed point prefix.  Requires s primitive, aperiodic, constant
/// length.
unsigned height(const Substitution& s);

/// Minimal image size over the closed column semigroup.
std::size_t column_rank(const Substitution& s);

/// True iff some power of s has all columns of rank column_rank(s).
/// Errors with rank_one when the column rank is 1.
bool is_quasi_bijective(const Substitution& s);

struct SimplifyResult {
  Substitution substitution;
  unsigned exponent;
};

/// Smallest power of s that is simplified: every column has the minimal
/// rank, the first and last columns are idempotent, and every periodic seed
/// is fixed.
SimplifyResult simplify(const Substitution& s, unsigned max_power = 64);

bool is_simplified(const Substitution& s);

/// All seeds a.b with a in im(theta_{l-1}), b in im(theta_0), ab allowed.
/// Requires s simplified.
std::vector<Seed> fixed_point_seeds(const Substitution& s);

namespace detail {
// Seed enumeration without the simplified-form check; used once the extreme
// columns are known idempotent.
std::vector<Seed> fixed_point_seeds_unchecked(const Substitution& s);
}  // namespace detail

}  // namespace elliskernel
