#include "elliskernel/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace elliskernel {

GroupTable::GroupTable(std::vector<std::string> names,
                       std::vector<std::vector<std::uint16_t>> table,
                       std::uint16_t identity)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
  std::size_t n = table_.size();
  if (n == 0 || names_.size() != n || identity_ >= n) {
    throw std::invalid_argument("GroupTable: malformed table");
  }
  for (const auto& row : table_) {
    if (row.size() != n) {
      throw std::invalid_argument("GroupTable: ragged table");
    }
    for (std::uint16_t v : row) {
      if (v >= n) {
        throw std::invalid_argument("GroupTable: entry out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw std::invalid_argument("GroupTable: identity law fails");
    }
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("GroupTable: missing inverse");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw std::invalid_argument("GroupTable: associativity fails");
        }
      }
    }
  }
}

GroupTable GroupTable::cyclic(unsigned n) {
  if (n == 0 || n > 60000) {
    throw std::invalid_argument("cyclic: order out of range");
  }
  std::vector<std::string> names(n);
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (unsigned a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (unsigned b = 0; b < n; ++b) {
      table[a][b] = static_cast<std::uint16_t>((a + b) % n);
    }
  }
  return GroupTable(std::move(names), std::move(table), 0);
}

GroupTable GroupTable::symmetric(unsigned n) {
  if (n == 0 || n > 7) {
    throw std::invalid_argument("symmetric: degree out of range");
  }
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  std::map<std::vector<std::uint8_t>, std::uint16_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    index[perms[i]] = static_cast<std::uint16_t>(i);
  }
  std::vector<std::string> names(m);
  std::vector<std::vector<std::uint16_t>> table(m, std::vector<std::uint16_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    std::string nm;
    for (std::uint8_t v : perms[a]) {
      nm += static_cast<char>('1' + v);
    }
    names[a] = nm;
    for (std::size_t b = 0; b < m; ++b) {
      // Product "a after b": apply permutation b first.
      std::vector<std::uint8_t> c(n);
      for (unsigned x = 0; x < n; ++x) {
        c[x] = perms[a][perms[b][x]];
      }
      table[a][b] = index.at(c);
    }
  }
  return GroupTable(std::move(names), std::move(table), 0);
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  std::size_t n = a.size() * b.size();
  if (n > 60000) {
    throw std::invalid_argument("direct_product: order out of range");
  }
  auto id = [&](std::size_t x, std::size_t y) {
    return static_cast<std::uint16_t>(x * b.size() + y);
  };
  std::vector<std::string> names(n);
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (std::size_t xa = 0; xa < a.size(); ++xa) {
    for (std::size_t ya = 0; ya < b.size(); ++ya) {
      names[id(xa, ya)] = "(" + a.name(static_cast<std::uint16_t>(xa)) + "," +
                          b.name(static_cast<std::uint16_t>(ya)) + ")";
      for (std::size_t xb = 0; xb < a.size(); ++xb) {
        for (std::size_t yb = 0; yb < b.size(); ++yb) {
          table[id(xa, ya)][id(xb, yb)] =
              id(a.mul(static_cast<std::uint16_t>(xa), static_cast<std::uint16_t>(xb)),
                 b.mul(static_cast<std::uint16_t>(ya), static_cast<std::uint16_t>(yb)));
        }
      }
    }
  }
  return GroupTable(std::move(names), std::move(table),
                    id(a.identity(), b.identity()));
}

GroupTable GroupTable::from_h_class(
    const HClassGroup& h,
    const std::function<std::string(const FiniteMap&)>& name) {
  std::size_t n = h.members.size();
  std::vector<std::string> names(n);
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  auto index = [&](const FiniteMap& f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (h.members[i] == f) {
        return static_cast<std::uint16_t>(i);
      }
    }
    throw std::logic_error("from_h_class: product left the class");
  };
  std::uint16_t id = index(h.identity);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = name(h.members[a]);
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = index(h.members[a].after(h.members[b]));
    }
  }
  return GroupTable(std::move(names), std::move(table), id);
}

unsigned GroupTable::element_order(std::uint16_t a) const {
  unsigned k = 1;
  std::uint16_t p = a;
  while (p != identity_) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

std::optional<std::uint16_t> GroupTable::index_of_name(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == n) {
      return static_cast<std::uint16_t>(i);
    }
  }
  return std::nullopt;
}

std::vector<std::uint16_t> GroupTable::subgroup_closure(
    std::vector<std::uint16_t> gens) const {
  std::set<std::uint16_t> closure{identity_};
  std::vector<std::uint16_t> work{identity_};
  auto add = [&](std::uint16_t x) {
    if (closure.insert(x).second) {
      work.push_back(x);
    }
  };
  for (std::uint16_t g : gens) {
    add(g);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(mul(work[i], work[j]));
      add(mul(work[j], work[i]));
    }
  }
  return std::vector<std::uint16_t>(closure.begin(), closure.end());
}

std::vector<std::uint16_t> GroupTable::normal_closure(
    const std::vector<std::uint16_t>& subset) const {
  std::vector<std::uint16_t> gens;
  for (std::uint16_t h : subset) {
    for (std::uint16_t g = 0; g < size(); ++g) {
      gens.push_back(mul(mul(g, h), inverse(g)));
    }
  }
  return subgroup_closure(std::move(gens));
}

std::vector<std::uint16_t> GroupTable::generating_sequence() const {
  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> generated{identity_};
  while (generated.size() < size()) {
    std::uint16_t next = 0;
    while (std::binary_search(generated.begin(), generated.end(), next)) {
      ++next;
    }
    gens.push_back(next);
    generated = subgroup_closure(gens);
  }
  return gens;
}

namespace {

// Extends the partial map on generator images to the whole group, or reports
// inconsistency.  Elements are reached as words in the generators.
std::optional<std::vector<std::uint16_t>> extend_hom(
    const GroupTable& g, const GroupTable& h,
    const std::vector<std::uint16_t>& gens,
    const std::vector<std::uint16_t>& images) {
  std::vector<int> map(g.size(), -1);
  map[g.identity()] = h.identity();
  std::vector<std::uint16_t> work{g.identity()};
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::uint16_t x = work[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::uint16_t y = g.mul(x, gens[k]);
      std::uint16_t im = h.mul(static_cast<std::uint16_t>(map[x]), images[k]);
      if (map[y] < 0) {
        map[y] = im;
        work.push_back(y);
      } else if (map[y] != im) {
        return std::nullopt;
      }
    }
  }
  // Homomorphism check on the full table, plus bijectivity.
  std::vector<std::uint16_t> out(g.size());
  std::vector<bool> hit(h.size(), false);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (map[x] < 0) {
      return std::nullopt;
    }
    out[x] = static_cast<std::uint16_t>(map[x]);
    if (hit[out[x]]) {
      return std::nullopt;
    }
    hit[out[x]] = true;
  }
  for (std::uint16_t a = 0; a < g.size(); ++a) {
    for (std::uint16_t b = 0; b < g.size(); ++b) {
      if (out[g.mul(a, b)] != h.mul(out[a], out[b])) {
        return std::nullopt;
      }
    }
  }
  return out;
}

}  // namespace

bool GroupTable::for_each_isomorphism(
    const GroupTable& other,
    const std::function<bool(const std::vector<std::uint16_t>&)>& visit) const {
  if (size() != other.size()) {
    return false;
  }
  std::multiset<unsigned> mine, theirs;
  for (std::uint16_t a = 0; a < size(); ++a) {
    mine.insert(element_order(a));
    theirs.insert(other.element_order(a));
  }
  if (mine != theirs) {
    return false;
  }
  std::vector<std::uint16_t> gens = generating_sequence();
  std::vector<std::uint16_t> images(gens.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::optional<std::vector<std::uint16_t>> full =
          extend_hom(*this, other, gens, images);
      return full && visit(*full);
    }
    unsigned ord = element_order(gens[k]);
    for (std::uint16_t cand = 0; cand < other.size(); ++cand) {
      if (other.element_order(cand) != ord) {
        continue;
      }
      images[k] = cand;
      if (rec(k + 1)) {
        return true;
      }
    }
    return false;
  };
  return rec(0);
}

bool GroupTable::isomorphic_to(const GroupTable& other) const {
  return for_each_isomorphism(other, [](const std::vector<std::uint16_t>&) {
    return true;
  });
}

}  // namespace elliskernel
