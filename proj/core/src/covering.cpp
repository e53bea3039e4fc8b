#include "elliskernel/covering.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

namespace {

constexpr const char* kNamePool =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

}  // namespace

bool is_cocycle(const Substitution& s, const GroupTable& g, const Cocycle& q) {
  if (q.assignment.size() != s.alphabet_size()) {
    return false;
  }
  for (std::uint16_t v : q.assignment) {
    if (v >= g.size()) {
      return false;
    }
  }
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    if (cocycle_of_word(g, q, s.rule(a)) != q.assignment[a]) {
      return false;
    }
  }
  return true;
}

std::uint16_t cocycle_of_word(const GroupTable& g, const Cocycle& q, const Word& w) {
  std::uint16_t acc = g.identity();
  for (char c : w) {
    acc = g.mul(acc, q.assignment[static_cast<std::uint8_t>(c)]);
  }
  return acc;
}

std::vector<Cocycle> solve_cocycles(const Substitution& s, const GroupTable& g) {
  std::size_t n = s.alphabet_size();
  std::vector<Cocycle> out;
  Cocycle cur;
  cur.assignment.assign(n, g.identity());

  // Constraint for letter a can be checked once every letter of theta(a)
  // and a itself are assigned.
  auto checkable = [&](std::size_t assigned, Letter a) {
    if (a >= assigned) {
      return false;
    }
    const Word& w = s.rule(a);
    return std::all_of(w.begin(), w.end(), [&](char c) {
      return static_cast<std::size_t>(static_cast<std::uint8_t>(c)) < assigned;
    });
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    for (Letter a = 0; a < n; ++a) {
      if (checkable(k, a) && !checkable(k > 0 ? k - 1 : 0, a)) {
        if (cocycle_of_word(g, cur, s.rule(a)) != cur.assignment[a]) {
          return;
        }
      }
    }
    if (k == n) {
      if (is_cocycle(s, g, cur)) {
        out.push_back(cur);
      }
      return;
    }
    for (std::uint16_t v = 0; v < g.size(); ++v) {
      cur.assignment[k] = v;
      rec(k + 1);
    }
    cur.assignment[k] = g.identity();
  };
  rec(0);
  return out;
}

Substitution lift_substitution(const Substitution& s, const GroupTable& g,
                               const Cocycle& q,
                               std::vector<LiftedLetter>* legend) {
  std::size_t n = s.alphabet_size() * g.size();
  if (n > 62) {
    fail(errc::too_large, "lift_substitution: lifted alphabet exceeds 62 letters");
  }
  if (q.assignment.size() != s.alphabet_size()) {
    throw std::invalid_argument("lift_substitution: labeling size mismatch");
  }
  auto lifted_index = [&](Letter a, std::uint16_t h) {
    return static_cast<Letter>(a * g.size() + h);
  };
  std::vector<char> alphabet(n);
  std::vector<LiftedLetter> leg(n);
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    for (std::uint16_t h = 0; h < g.size(); ++h) {
      alphabet[lifted_index(a, h)] = kNamePool[lifted_index(a, h)];
      leg[lifted_index(a, h)] = LiftedLetter{a, h};
    }
  }
  std::vector<Word> rules(n);
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    const Word& w = s.rule(a);
    for (std::uint16_t h = 0; h < g.size(); ++h) {
      Word image;
      image.reserve(w.size());
      std::uint16_t acc = h;
      for (char c : w) {
        Letter b = static_cast<std::uint8_t>(c);
        image.push_back(static_cast<char>(lifted_index(b, acc)));
        acc = g.mul(acc, q.assignment[b]);
      }
      rules[lifted_index(a, h)] = image;
    }
  }
  if (legend) {
    *legend = leg;
  }
  return Substitution(alphabet, std::move(rules));
}

CoverResult build_cover(const Substitution& s, const GroupTable& g, const Cocycle& q) {
  if (!is_cocycle(s, g, q)) {
    fail(errc::invalid_cocycle,
         "build_cover: the labeling does not satisfy q(theta(a)) = q(a)");
  }
  CoverResult r{s, s, {}, g, q, false, {}, std::nullopt, std::nullopt, std::nullopt};
  r.lifted = lift_substitution(s, g, q, &r.legend);
  r.nontrivial = is_primitive(r.lifted);
  return r;
}

std::size_t default_pair_window(const Substitution& s) {
  std::size_t l = 0;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    l = std::max(l, s.rule(a).size());
  }
  return l * l * s.alphabet_size();
}

namespace {

// Normalize a candidate disagreement pair: strip shared end letters and
// order the two words.
std::optional<WordPair> normalize_pair(Word x, Word y) {
  while (!x.empty() && !y.empty() && x.front() == y.front()) {
    x.erase(x.begin());
    y.erase(y.begin());
  }
  while (!x.empty() && !y.empty() && x.back() == y.back()) {
    x.pop_back();
    y.pop_back();
  }
  if (x.empty() || y.empty()) {
    return std::nullopt;
  }
  if (y < x) {
    std::swap(x, y);
  }
  return WordPair{x, y};
}

std::set<Word> words_of_length(const std::set<Word>& top, std::size_t n) {
  std::set<Word> out;
  for (const Word& w : top) {
    out.insert(w.substr(0, n));
  }
  return out;
}

}  // namespace

std::vector<WordPair> asymptotic_pair_words(const Substitution& s,
                                            std::size_t window,
                                            std::size_t max_disagreement) {
  if (window == 0 || max_disagreement == 0) {
    throw std::invalid_argument("asymptotic_pair_words: positive sizes required");
  }
  std::set<Word> top = language(s, 2 * window + max_disagreement);
  std::set<WordPair> found;
  for (std::size_t len = 1; len <= max_disagreement; ++len) {
    std::map<std::pair<Word, Word>, std::set<Word>> by_context;
    for (const Word& w : words_of_length(top, 2 * window + len)) {
      Word prefix = w.substr(0, window);
      Word suffix = w.substr(window + len, window);
      Word middle = w.substr(window, len);
      by_context[{prefix, suffix}].insert(middle);
    }
    for (const auto& [ctx, middles] : by_context) {
      for (auto it = middles.begin(); it != middles.end(); ++it) {
        for (auto jt = std::next(it); jt != middles.end(); ++jt) {
          std::optional<WordPair> p = normalize_pair(*it, *jt);
          if (p) {
            found.insert(*p);
          }
        }
      }
    }
  }
  return std::vector<WordPair>(found.begin(), found.end());
}

void verify_asymptotic_pair(const Substitution& s, const WordPair& pair,
                            std::size_t window) {
  if (pair.first.size() != pair.second.size() || pair.first == pair.second) {
    throw std::invalid_argument(
        "asymptotic pair must consist of two distinct words of equal length");
  }
  std::size_t len = pair.first.size();
  std::set<Word> top = language(s, 2 * window + len);
  for (const Word& a : top) {
    if (a.substr(window, len) != pair.first) {
      continue;
    }
    Word b = a.substr(0, window) + pair.second + a.substr(window + len, window);
    if (top.count(b)) {
      return;
    }
  }
  fail(errc::window_exceeded,
       "the disagreement region does not close within the window");
}

void cover_invariants(CoverResult& c, const std::vector<WordPair>& pairs,
                      std::optional<unsigned> cr_base) {
  if (!c.nontrivial) {
    throw std::invalid_argument("cover_invariants: cover must be nontrivial");
  }
  if (pairs.empty()) {
    throw std::invalid_argument("cover_invariants: no asymptotic pairs");
  }
  c.omega_values.clear();
  for (const WordPair& p : pairs) {
    std::uint16_t wp = cocycle_of_word(c.group, c.q, p.first);
    std::uint16_t wm = cocycle_of_word(c.group, c.q, p.second);
    c.omega_values.push_back(c.group.mul(wp, c.group.inverse(wm)));
  }
  unsigned k = static_cast<unsigned>(c.group.subgroup_closure(c.omega_values).size());
  c.omega_order = k;
  c.created_height = static_cast<unsigned>(c.group.size()) / k;
  if (cr_base) {
    c.cr_lifted = *cr_base * k;
  } else {
    c.cr_lifted = std::nullopt;
  }
}

}  // namespace elliskernel
