#include "elliskernel/rees.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

namespace {

void validate(const ReesPresentation& p) {
  if (p.row_labels.empty() || p.col_labels.empty()) {
    throw std::invalid_argument("ReesPresentation: empty index set");
  }
  if (p.sandwich.size() != p.row_labels.size()) {
    throw std::invalid_argument("ReesPresentation: sandwich row count");
  }
  for (const auto& row : p.sandwich) {
    if (row.size() != p.col_labels.size()) {
      throw std::invalid_argument("ReesPresentation: sandwich column count");
    }
    for (std::uint16_t e : row) {
      if (e >= p.group.size()) {
        throw std::invalid_argument("ReesPresentation: sandwich entry range");
      }
    }
  }
}

}  // namespace

ReesSemigroup::ReesSemigroup(ReesPresentation p) : p_(std::move(p)) {
  validate(p_);
  for (std::uint16_t i = 0; i < p_.col_labels.size(); ++i) {
    for (std::uint16_t g = 0; g < p_.group.size(); ++g) {
      for (std::uint16_t l = 0; l < p_.row_labels.size(); ++l) {
        elements_.push_back(ReesElement{i, g, l});
      }
    }
  }
}

ReesElement ReesSemigroup::product(const ReesElement& x, const ReesElement& y) const {
  std::uint16_t mid = p_.group.mul(x.g, p_.group.mul(p_.entry(x.row, y.col), y.g));
  return ReesElement{x.col, mid, y.row};
}

bool ReesSemigroup::is_idempotent(const ReesElement& x) const {
  return product(x, x) == x;
}

ReesSemigroup enumerate(const ReesPresentation& p) { return ReesSemigroup(p); }

std::vector<ReesElement> idempotents_of(const ReesPresentation& p) {
  validate(p);
  std::vector<ReesElement> out;
  for (std::uint16_t i = 0; i < p.col_labels.size(); ++i) {
    for (std::uint16_t l = 0; l < p.row_labels.size(); ++l) {
      out.push_back(ReesElement{i, p.group.inverse(p.entry(l, i)), l});
    }
  }
  return out;
}

std::vector<std::uint16_t> little_structure_group(const ReesPresentation& p) {
  validate(p);
  std::vector<std::uint16_t> gens;
  for (const auto& row : p.sandwich) {
    gens.insert(gens.end(), row.begin(), row.end());
  }
  return p.group.subgroup_closure(std::move(gens));
}

bool is_orthodox(const ReesPresentation& p) {
  ReesSemigroup s = enumerate(p);
  std::vector<ReesElement> idem = idempotents_of(p);
  for (const ReesElement& x : idem) {
    for (const ReesElement& y : idem) {
      if (!s.is_idempotent(s.product(x, y))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Matrix = std::vector<std::vector<std::uint16_t>>;

// Strip one-sided scalings: the normalized matrix has identity first row and
// first column, and scaled matrices agree after normalization up to a global
// conjugation (absorbed by the group-isomorphism search).
Matrix normalized(const GroupTable& g, const Matrix& a) {
  std::size_t rows = a.size();
  std::size_t cols = a[0].size();
  Matrix out(rows, std::vector<std::uint16_t>(cols));
  for (std::size_t l = 0; l < rows; ++l) {
    for (std::size_t i = 0; i < cols; ++i) {
      // (a_{l 0})^{-1} a_{l i} (a_{0 i})^{-1} a_{0 0}
      out[l][i] = g.mul(g.mul(g.inverse(a[l][0]), a[l][i]),
                        g.mul(g.inverse(a[0][i]), a[0][0]));
    }
  }
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

// Scalings u, v with q_{chi(l), psi(i)} = v_l theta(p_{l i}) u_i, derived from
// the normalization identities; returns nullopt when no scalings exist.
std::optional<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>>
solve_scalings(const GroupTable& g, const Matrix& b, const Matrix& c) {
  std::size_t rows = b.size();
  std::size_t cols = b[0].size();
  // Fix v_0 = c_{00} b_{00}^{-1} with u_0 = identity, then propagate.
  std::vector<std::uint16_t> u(cols), v(rows);
  u[0] = g.identity();
  v[0] = g.mul(c[0][0], g.inverse(b[0][0]));
  for (std::size_t i = 1; i < cols; ++i) {
    // c_{0 i} = v_0 b_{0 i} u_i
    u[i] = g.mul(g.inverse(g.mul(v[0], b[0][i])), c[0][i]);
  }
  for (std::size_t l = 1; l < rows; ++l) {
    // c_{l 0} = v_l b_{l 0} u_0
    v[l] = g.mul(c[l][0], g.inverse(b[l][0]));
  }
  for (std::size_t l = 0; l < rows; ++l) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (g.mul(v[l], g.mul(b[l][i], u[i])) != c[l][i]) {
        return std::nullopt;
      }
    }
  }
  return std::make_pair(u, v);
}

}  // namespace

bool verify_witness(const ReesPresentation& p, const ReesPresentation& q,
                    const ReesIsoWitness& w) {
  std::size_t rows = p.row_labels.size();
  std::size_t cols = p.col_labels.size();
  if (q.row_labels.size() != rows || q.col_labels.size() != cols) {
    return false;
  }
  for (std::size_t l = 0; l < rows; ++l) {
    for (std::size_t i = 0; i < cols; ++i) {
      std::uint16_t expected = q.sandwich[w.row_map[l]][w.col_map[i]];
      std::uint16_t got = q.group.mul(
          w.v[l], q.group.mul(w.group_map[p.sandwich[l][i]], w.u[i]));
      if (expected != got) {
        return false;
      }
    }
  }
  // theta must be a group isomorphism.
  std::vector<bool> hit(q.group.size(), false);
  if (w.group_map.size() != p.group.size() || p.group.size() != q.group.size()) {
    return false;
  }
  for (std::uint16_t a = 0; a < p.group.size(); ++a) {
    if (hit[w.group_map[a]]) {
      return false;
    }
    hit[w.group_map[a]] = true;
    for (std::uint16_t b = 0; b < p.group.size(); ++b) {
      if (w.group_map[p.group.mul(a, b)] !=
          q.group.mul(w.group_map[a], w.group_map[b])) {
        return false;
      }
    }
  }
  return true;
}

ReesIsoResult is_isomorphic(const ReesPresentation& p, const ReesPresentation& q,
                            std::size_t budget) {
  validate(p);
  validate(q);
  std::size_t rows = p.row_labels.size();
  std::size_t cols = p.col_labels.size();
  if (q.row_labels.size() != rows || q.col_labels.size() != cols ||
      q.group.size() != p.group.size()) {
    return {};
  }
  std::size_t perms = factorial(rows) * factorial(cols);
  if (perms > budget || p.group.size() > budget / perms) {
    fail(errc::too_large, "is_isomorphic: search space exceeds the budget");
  }

  std::vector<std::uint16_t> row_perm(rows);
  std::vector<std::uint16_t> col_perm(cols);
  std::iota(row_perm.begin(), row_perm.end(), 0);

  ReesIsoResult result;
  std::size_t candidates = 0;
  p.group.for_each_isomorphism(q.group, [&](const std::vector<std::uint16_t>& theta) {
    Matrix mapped(rows, std::vector<std::uint16_t>(cols));
    for (std::size_t l = 0; l < rows; ++l) {
      for (std::size_t i = 0; i < cols; ++i) {
        mapped[l][i] = theta[p.sandwich[l][i]];
      }
    }
    Matrix nb = normalized(q.group, mapped);
    std::vector<std::uint16_t> rp = row_perm;
    do {
      std::vector<std::uint16_t> cp(cols);
      std::iota(cp.begin(), cp.end(), 0);
      do {
        if (++candidates > budget) {
          fail(errc::too_large, "is_isomorphic: search space exceeds the budget");
        }
        // Pull q's matrix back through the index maps, then compare
        // normalized forms; scalings are reconstructed on success.
        Matrix pulled(rows, std::vector<std::uint16_t>(cols));
        for (std::size_t l = 0; l < rows; ++l) {
          for (std::size_t i = 0; i < cols; ++i) {
            pulled[l][i] = q.sandwich[rp[l]][cp[i]];
          }
        }
        if (normalized(q.group, pulled) != nb) {
          continue;
        }
        auto scalings = solve_scalings(q.group, mapped, pulled);
        if (!scalings) {
          continue;
        }
        ReesIsoWitness w;
        w.group_map = theta;
        w.row_map = rp;
        w.col_map = cp;
        w.u = scalings->first;
        w.v = scalings->second;
        if (verify_witness(p, q, w)) {
          result.isomorphic = true;
          result.witness = std::move(w);
          return true;
        }
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
  });
  return result;
}

ReesPresentation m2_example() {
  GroupTable s2 = GroupTable::cyclic(2);
  ReesPresentation p{s2, {"+", "-"}, {"1", "2"}, {{0, 0}, {0, 1}}};
  return p;
}

}  // namespace elliskernel
