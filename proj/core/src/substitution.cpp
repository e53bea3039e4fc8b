#include "elliskernel/substitution.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

namespace {

constexpr std::size_t kMaxWordLength = 1u << 22;

std::uint8_t at(const Word& w, std::size_t i) {
  return static_cast<std::uint8_t>(w[i]);
}

}  // namespace

Substitution::Substitution(std::vector<char> alphabet, std::vector<Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (alphabet_.empty() || alphabet_.size() > 250) {
    throw std::invalid_argument("Substitution: alphabet size out of range");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j) {
      if (alphabet_[i] == alphabet_[j]) {
        throw std::invalid_argument("Substitution: duplicate letter");
      }
    }
  }
  if (rules_.size() != alphabet_.size()) {
    throw std::invalid_argument("Substitution: one rule per letter required");
  }
  for (const Word& w : rules_) {
    if (w.empty()) {
      throw std::invalid_argument("Substitution: empty image word");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (at(w, i) >= alphabet_.size()) {
        throw std::invalid_argument("Substitution: image letter out of range");
      }
    }
  }
  std::size_t l = rules_[0].size();
  bool constant = std::all_of(rules_.begin(), rules_.end(),
                              [&](const Word& w) { return w.size() == l; });
  if (constant) {
    length_ = l;
  }
}

Substitution Substitution::from_strings(
    const std::vector<char>& alphabet,
    const std::vector<std::string>& rule_texts) {
  std::vector<Word> rules;
  Substitution tmp(alphabet, std::vector<Word>(alphabet.size(), Word(1, '\0')));
  rules.reserve(rule_texts.size());
  for (const std::string& text : rule_texts) {
    rules.push_back(tmp.parse_word(text));
  }
  return Substitution(alphabet, std::move(rules));
}

std::optional<Letter> Substitution::letter_index(char name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == name) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

Word Substitution::apply(const Word& w) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += rules_[at(w, i)].size();
  }
  if (out > kMaxWordLength) {
    fail(errc::too_large, "substitution image exceeds the word-length budget");
  }
  Word r;
  r.reserve(out);
  for (std::size_t i = 0; i < w.size(); ++i) {
    r += rules_[at(w, i)];
  }
  return r;
}

Substitution Substitution::power(unsigned n) const {
  if (n == 0) {
    throw std::invalid_argument("Substitution::power: exponent must be >= 1");
  }
  std::vector<Word> rules = rules_;
  for (unsigned k = 1; k < n; ++k) {
    for (Word& w : rules) {
      w = apply(w);
    }
  }
  return Substitution(alphabet_, std::move(rules));
}

Word Substitution::parse_word(const std::string& text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    std::optional<Letter> a = letter_index(c);
    if (!a) {
      throw ParseError(std::string("unknown letter '") + c + "' in word");
    }
    w.push_back(static_cast<char>(*a));
  }
  return w;
}

std::string Substitution::render(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += alphabet_[at(w, i)];
  }
  return out;
}

std::string Substitution::render(const Seed& s) const {
  return std::string(1, alphabet_[s.left]) + "." + alphabet_[s.right];
}

std::vector<FiniteMap> expand_columns(const Substitution& s) {
  if (!s.length()) {
    fail(errc::not_constant_length,
         "expand_columns requires a constant-length substitution");
  }
  std::size_t l = *s.length();
  std::size_t n = s.alphabet_size();
  std::vector<FiniteMap> cols;
  cols.reserve(l);
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::uint8_t> t(n);
    for (std::size_t a = 0; a < n; ++a) {
      t[a] = at(s.rule(static_cast<Letter>(a)), i);
    }
    cols.emplace_back(std::move(t));
  }
  return cols;
}

Substitution assemble_columns(const std::vector<char>& alphabet,
                              const std::vector<FiniteMap>& columns) {
  std::vector<Word> rules(alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    Word w;
    w.reserve(columns.size());
    for (const FiniteMap& c : columns) {
      w.push_back(static_cast<char>(c(static_cast<std::uint8_t>(a))));
    }
    rules[a] = w;
  }
  return Substitution(alphabet, std::move(rules));
}

std::vector<FiniteMap> compose_expansion(const std::vector<FiniteMap>& f,
                                         const std::vector<FiniteMap>& g) {
  if (f.empty() || g.empty()) {
    throw std::invalid_argument("compose_expansion: empty expansion");
  }
  std::vector<FiniteMap> out;
  out.reserve(f.size() * g.size());
  for (const FiniteMap& gi : g) {
    for (const FiniteMap& fj : f) {
      out.push_back(fj.after(gi));
    }
  }
  return out;
}

bool is_primitive(const Substitution& s) {
  std::size_t n = s.alphabet_size();
  if (n == 1) {
    return true;
  }
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    const Word& w = s.rule(static_cast<Letter>(a));
    for (std::size_t i = 0; i < w.size(); ++i) {
      m[a][at(w, i)] = true;
    }
  }
  // Wielandt bound: primitive iff the boolean power at (n-1)^2 + 1 is full.
  std::size_t target = (n - 1) * (n - 1) + 1;
  auto mul = [&](const std::vector<std::vector<bool>>& x,
                 const std::vector<std::vector<bool>>& y) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k]) {
          for (std::size_t j = 0; j < n; ++j) {
            if (y[k][j]) {
              r[i][j] = true;
            }
          }
        }
      }
    }
    return r;
  };
  std::vector<std::vector<bool>> acc;
  std::vector<std::vector<bool>> base = m;
  std::size_t e = target;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? mul(acc, base) : base;
      have = true;
    }
    base = mul(base, base);
    e >>= 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!acc[i][j]) {
        return false;
      }
    }
  }
  return true;
}

std::set<Word> language(const Substitution& s, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("language: n must be positive");
  }
  if (!is_primitive(s)) {
    fail(errc::not_primitive, "language requires a primitive substitution");
  }
  auto factors = [n](const Word& w, std::set<Word>& into) {
    if (w.size() < n) {
      return;
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      into.insert(w.substr(i, n));
    }
  };
  // Seed with factors of iterated letter images, then close under the
  // substitution.  Everything produced is allowed; stabilization is exact.
  std::set<Word> cur;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    Word w(1, static_cast<char>(a));
    for (unsigned round = 0; round < 64 && w.size() < n; ++round) {
      w = s.apply(w);
    }
    if (w.size() < n) {
      fail(errc::too_large, "language: images do not reach the requested length");
    }
    factors(w, cur);
  }
  for (;;) {
    std::set<Word> next = cur;
    for (const Word& w : cur) {
      factors(s.apply(w), next);
    }
    if (next == cur) {
      return cur;
    }
    cur = std::move(next);
  }
}

std::size_t default_aperiodicity_bound(const Substitution& s) {
  std::size_t l = 0;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    l = std::max(l, s.rule(a).size());
  }
  return l * l * s.alphabet_size() * s.alphabet_size();
}

bool is_aperiodic(const Substitution& s, std::size_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("is_aperiodic: bound must be positive");
  }
  std::set<Word> top = language(s, bound);
  // Every shorter factor is a prefix of a length-bound factor, so the
  // complexity p(n) is the number of distinct n-prefixes.
  for (std::size_t n = 1; n <= bound; ++n) {
    std::set<Word> prefixes;
    for (const Word& w : top) {
      prefixes.insert(w.substr(0, n));
    }
    if (prefixes.size() <= n) {
      return false;
    }
  }
  return true;
}

unsigned height(const Substitution& s) {
  if (!s.length()) {
    fail(errc::not_constant_length, "height requires constant length");
  }
  std::size_t l = *s.length();
  std::size_t n = s.alphabet_size();
  std::vector<FiniteMap> cols = expand_columns(s);

  // Find the smallest power whose first column fixes a letter.
  unsigned power = 0;
  Letter start = 0;
  {
    FiniteMap p = cols[0];
    bool found = false;
    for (unsigned m = 1; m <= n && !found; ++m) {
      for (Letter a = 0; a < n; ++a) {
        if (p(a) == a) {
          power = m;
          start = a;
          found = true;
          break;
        }
      }
      if (!found) {
        p = p.after(cols[0]);
      }
    }
    if (!found) {
      fail(errc::no_fixed_letter,
           "height: no power of the first column fixes a letter");
    }
  }

  Substitution sp = power == 1 ? s : s.power(power);
  Word prefix = sp.apply(Word(1, static_cast<char>(start)));
  unsigned long long g = 0;
  unsigned stable_rounds = 0;
  std::size_t scanned = 1;  // position 0 is the start letter itself
  while (stable_rounds < 2) {
    unsigned long long before = g;
    for (std::size_t i = scanned; i < prefix.size(); ++i) {
      if (at(prefix, i) == start) {
        g = std::gcd(g, static_cast<unsigned long long>(i));
      }
    }
    scanned = prefix.size();
    stable_rounds = (g != 0 && g == before) ? stable_rounds + 1 : 0;
    if (stable_rounds < 2) {
      if (prefix.size() > kMaxWordLength / 2) {
        fail(errc::too_large, "height: prefix budget exceeded");
      }
      prefix = sp.apply(prefix);
    }
  }

  // Largest divisor of the return-position gcd that is coprime to l.
  unsigned long long h = g;
  unsigned long long ll = l;
  for (unsigned long long p = 2; p * p <= ll; ++p) {
    if (ll % p == 0) {
      while (ll % p == 0) {
        ll /= p;
      }
      while (h % p == 0) {
        h /= p;
      }
    }
  }
  if (ll > 1) {
    while (h % ll == 0) {
      h /= ll;
    }
  }
  return static_cast<unsigned>(h);
}

namespace {

// Distinct column maps of s together with the minimal rank of the closed
// column semigroup (the closure is computed by right-extension with the
// generators, which exhausts all n-fold products).
std::vector<FiniteMap> closed_column_semigroup(const Substitution& s) {
  std::vector<FiniteMap> cols = expand_columns(s);
  std::vector<FiniteMap> elements;
  auto add = [&](const FiniteMap& f) {
    if (std::find(elements.begin(), elements.end(), f) == elements.end()) {
      elements.push_back(f);
      return true;
    }
    return false;
  };
  for (const FiniteMap& c : cols) {
    add(c);
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const FiniteMap& c : cols) {
      add(elements[i].after(c));
    }
  }
  return elements;
}

}  // namespace

std::size_t column_rank(const Substitution& s) {
  std::vector<FiniteMap> sg = closed_column_semigroup(s);
  std::size_t c = s.alphabet_size();
  for (const FiniteMap& f : sg) {
    c = std::min(c, f.rank());
  }
  return c;
}

namespace {

// Sets P_m of all m-fold column products, iterated until the first all-rank-c
// level or a cycle.  Returns the first such m, or nullopt.
std::optional<unsigned> first_uniform_rank_level(const std::vector<FiniteMap>& cols,
                                                 std::size_t c) {
  auto all_rank_c = [&](const std::set<FiniteMap>& level) {
    return std::all_of(level.begin(), level.end(),
                       [&](const FiniteMap& f) { return f.rank() == c; });
  };
  std::set<FiniteMap> level(cols.begin(), cols.end());
  std::vector<std::set<FiniteMap>> seen{level};
  for (unsigned m = 1;; ++m) {
    if (all_rank_c(level)) {
      return m;
    }
    std::set<FiniteMap> next;
    for (const FiniteMap& p : level) {
      for (const FiniteMap& c2 : cols) {
        next.insert(c2.after(p));
      }
    }
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
      return std::nullopt;
    }
    seen.push_back(next);
    level = std::move(next);
  }
}

}  // namespace

bool is_quasi_bijective(const Substitution& s) {
  std::size_t c = column_rank(s);
  if (c == 1) {
    fail(errc::rank_one, "column rank 1: only the case c >= 2 is considered");
  }
  return first_uniform_rank_level(expand_columns(s), c).has_value();
}

namespace {

// Cycle lengths of the seed map (a,b) -> (theta_{l-1}(a), theta_0(b)) on the
// allowed two-letter words.
std::vector<unsigned> seed_cycle_lengths(const Substitution& s) {
  std::vector<FiniteMap> cols = expand_columns(s);
  const FiniteMap& first = cols.front();
  const FiniteMap& last = cols.back();
  std::set<Word> two = language(s, 2);
  std::vector<Word> nodes(two.begin(), two.end());
  auto step = [&](const Word& w) {
    Word r(2, '\0');
    r[0] = static_cast<char>(last(static_cast<std::uint8_t>(w[0])));
    r[1] = static_cast<char>(first(static_cast<std::uint8_t>(w[1])));
    return r;
  };
  std::vector<unsigned> lengths;
  for (const Word& w0 : nodes) {
    // Walk into the cycle, then measure it.
    Word w = w0;
    for (std::size_t i = 0; i <= nodes.size(); ++i) {
      w = step(w);
    }
    Word c = step(w);
    unsigned len = 1;
    while (c != w) {
      c = step(c);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

}  // namespace

SimplifyResult simplify(const Substitution& s, unsigned max_power) {
  std::size_t c = column_rank(s);
  if (c == 1) {
    fail(errc::rank_one, "column rank 1: only the case c >= 2 is considered");
  }
  std::vector<FiniteMap> cols = expand_columns(s);
  std::optional<unsigned> n0 = first_uniform_rank_level(cols, c);
  if (!n0) {
    fail(errc::not_quasi_bijective,
         "no power has all columns of minimal rank");
  }
  IterationProfile pf = iteration_profile(cols.front());
  IterationProfile pl = iteration_profile(cols.back());
  unsigned long long step = std::lcm<unsigned long long>(pf.period, pl.period);
  for (unsigned len : seed_cycle_lengths(s)) {
    step = std::lcm<unsigned long long>(step, len);
  }
  unsigned long long floor_n = std::max<unsigned long long>(
      {*n0, pf.tail, pl.tail});
  unsigned long long n = step;
  while (n < floor_n) {
    n += step;
  }
  if (n > max_power) {
    fail(errc::too_large, "simplify: exponent exceeds the power budget");
  }
  SimplifyResult r{s.power(static_cast<unsigned>(n)), static_cast<unsigned>(n)};
  assert(is_simplified(r.substitution));
  return r;
}

bool is_simplified(const Substitution& s) {
  if (!s.length()) {
    return false;
  }
  std::size_t c = column_rank(s);
  std::vector<FiniteMap> cols = expand_columns(s);
  for (const FiniteMap& f : cols) {
    if (f.rank() != c) {
      return false;
    }
  }
  if (!cols.front().is_idempotent() || !cols.back().is_idempotent()) {
    return false;
  }
  for (unsigned len : seed_cycle_lengths(s)) {
    if (len != 1) {
      return false;
    }
  }
  return true;
}

std::vector<Seed> fixed_point_seeds(const Substitution& s) {
  if (!is_simplified(s)) {
    fail(errc::not_simplified, "fixed_point_seeds requires a simplified substitution");
  }
  return detail::fixed_point_seeds_unchecked(s);
}

namespace detail {

std::vector<Seed> fixed_point_seeds_unchecked(const Substitution& s) {
  std::vector<FiniteMap> cols = expand_columns(s);
  std::vector<std::uint8_t> im_last = cols.back().image();
  std::vector<std::uint8_t> im_first = cols.front().image();
  std::set<Word> two = language(s, 2);
  std::vector<Seed> seeds;
  for (const Word& w : two) {
    Letter a = static_cast<std::uint8_t>(w[0]);
    Letter b = static_cast<std::uint8_t>(w[1]);
    if (std::binary_search(im_last.begin(), im_last.end(), a) &&
        std::binary_search(im_first.begin(), im_first.end(), b)) {
      seeds.push_back(Seed{a, b});
    }
  }
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

}  // namespace detail

}  // namespace elliskernel
