#include "elliskernel/transformation_semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

TransformationSemigroup TransformationSemigroup::close(
    const std::vector<FiniteMap>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("close: no generators");
  }
  TransformationSemigroup S;
  std::map<FiniteMap, std::uint32_t> index;
  auto add = [&](const FiniteMap& f) {
    auto [it, fresh] = index.emplace(f, static_cast<std::uint32_t>(S.elements_.size()));
    if (fresh) {
      S.elements_.push_back(f);
    }
    return fresh;
  };
  for (const FiniteMap& g : generators) {
    if (add(g)) {
      S.generators_.push_back(g);
    }
  }
  // Right-extension BFS: every word in the generators is reachable by
  // appending one generator on the argument side.
  for (std::size_t i = 0; i < S.elements_.size(); ++i) {
    for (const FiniteMap& g : S.generators_) {
      add(S.elements_[i].after(g));
    }
  }
  std::size_t n = S.elements_.size();
  S.product_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FiniteMap p = S.elements_[i].after(S.elements_[j]);
      auto it = index.find(p);
      if (it == index.end()) {
        throw std::logic_error("close: product escaped the closure");
      }
      S.product_[i][j] = it->second;
    }
  }
  return S;
}

bool TransformationSemigroup::contains(const FiniteMap& f) const {
  return std::find(elements_.begin(), elements_.end(), f) != elements_.end();
}

std::uint32_t TransformationSemigroup::index_of(const FiniteMap& f) const {
  auto it = std::find(elements_.begin(), elements_.end(), f);
  if (it == elements_.end()) {
    throw std::invalid_argument("index_of: element not in semigroup");
  }
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::size_t TransformationSemigroup::min_rank() const {
  std::size_t r = elements_.front().degree();
  for (const FiniteMap& f : elements_) {
    r = std::min(r, f.rank());
  }
  return r;
}

std::vector<FiniteMap> idempotents(const TransformationSemigroup& S) {
  std::vector<FiniteMap> out;
  for (const FiniteMap& f : S.elements()) {
    if (f.is_idempotent()) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<FiniteMap> h_class_members(const TransformationSemigroup& S,
                                       const FiniteMap& e_im,
                                       const FiniteMap& e_ker) {
  std::vector<std::uint8_t> im = e_im.image();
  std::vector<std::uint8_t> ker = e_ker.kernel_signature();
  std::vector<FiniteMap> out;
  for (const FiniteMap& f : S.elements()) {
    if (f.image() == im && f.kernel_signature() == ker) {
      out.push_back(f);
    }
  }
  return out;
}

bool HClassGroup::contains(const FiniteMap& f) const {
  return std::find(members.begin(), members.end(), f) != members.end();
}

const FiniteMap& HClassGroup::inverse_of(const FiniteMap& f) const {
  for (const FiniteMap& g : members) {
    if (f.after(g) == identity && g.after(f) == identity) {
      return g;
    }
  }
  throw std::invalid_argument("inverse_of: not a member of the class");
}

HClassGroup h_class_group(const TransformationSemigroup& S, const FiniteMap& e) {
  if (!e.is_idempotent() || !S.contains(e)) {
    throw std::invalid_argument("h_class_group: e must be an idempotent of S");
  }
  if (e.rank() != S.min_rank()) {
    fail(errc::not_minimal_rank,
         "h_class_group: the class of a non-minimal idempotent is not a group");
  }
  HClassGroup g{e, h_class_members(S, e, e)};
  return g;
}

FiniteMap corner_idempotent(const TransformationSemigroup& S,
                            const FiniteMap& e_from, const FiniteMap& e_to) {
  if (!e_from.is_idempotent() || !e_to.is_idempotent()) {
    throw std::invalid_argument("corner_idempotent: idempotent inputs required");
  }
  for (const FiniteMap& f : h_class_members(S, e_from, e_to)) {
    if (f.is_idempotent()) {
      return f;
    }
  }
  fail(errc::no_such_idempotent,
       "corner_idempotent: the class R_{e_from} ∩ L_{e_to} has no idempotent");
}

bool ConsecutivePairSet::contains(const FiniteMap& l, const FiniteMap& r) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(l, r)) !=
         pairs.end();
}

ConsecutivePairSet consecutive_pairs(const std::vector<FiniteMap>& columns) {
  if (columns.size() < 2) {
    throw std::invalid_argument("consecutive_pairs: need at least two columns");
  }
  TransformationSemigroup S = TransformationSemigroup::close(columns);
  std::set<std::pair<FiniteMap, FiniteMap>> set;
  std::vector<std::pair<FiniteMap, FiniteMap>> work;
  auto add = [&](FiniteMap l, FiniteMap r) {
    auto p = std::make_pair(std::move(l), std::move(r));
    if (set.insert(p).second) {
      work.push_back(p);
    }
  };
  // Level one, then pairs inside a deeper block: (theta_{j-1} c, theta_j c)
  // for every reachable composite c.  Block boundaries are handled by the
  // closure rule below.
  for (std::size_t j = 1; j < columns.size(); ++j) {
    add(columns[j - 1], columns[j]);
    for (const FiniteMap& c : S.elements()) {
      add(columns[j - 1].after(c), columns[j].after(c));
    }
  }
  const FiniteMap& first = columns.front();
  const FiniteMap& last = columns.back();
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto [l, r] = work[i];
    add(last.after(l), first.after(r));
  }
  ConsecutivePairSet out;
  // Deterministic order: by discovery index of the component maps.
  out.pairs.assign(set.begin(), set.end());
  std::sort(out.pairs.begin(), out.pairs.end(),
            [&](const auto& a, const auto& b) {
              auto ka = std::make_pair(S.index_of(a.first), S.index_of(a.second));
              auto kb = std::make_pair(S.index_of(b.first), S.index_of(b.second));
              return ka < kb;
            });
  return out;
}

std::vector<FiniteMap> normal_closure(const HClassGroup& G,
                                      const std::vector<FiniteMap>& H) {
  for (const FiniteMap& h : H) {
    if (!G.contains(h)) {
      throw std::invalid_argument("normal_closure: H must be a subset of G");
    }
  }
  std::set<FiniteMap> closure;
  std::vector<FiniteMap> work;
  auto add = [&](const FiniteMap& f) {
    if (closure.insert(f).second) {
      work.push_back(f);
    }
  };
  add(G.identity);
  for (const FiniteMap& h : H) {
    for (const FiniteMap& g : G.members) {
      add(g.after(h).after(G.inverse_of(g)));
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(work[i].after(work[j]));
      add(work[j].after(work[i]));
    }
  }
  std::vector<FiniteMap> out;
  for (const FiniteMap& g : G.members) {
    if (closure.count(g)) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace elliskernel
