#include <algorithm>
#include <set>

#include "doctest.h"
#include "elliskernel/errors.hpp"
#include "elliskernel/transformation_semigroup.hpp"
#include "test_helpers.hpp"

using namespace elliskernel;
using ektest::map_of;

namespace {

// Direct enumeration of consecutive pairs from the columns of theta^n,
// n <= depth; the independent route the fixed-point computation is checked
// against.
std::set<std::pair<FiniteMap, FiniteMap>> pairs_by_powers(
    const Substitution& s, unsigned depth) {
  std::vector<FiniteMap> cols = expand_columns(s);
  std::vector<FiniteMap> level = cols;
  std::set<std::pair<FiniteMap, FiniteMap>> out;
  for (unsigned n = 1; n <= depth; ++n) {
    if (n > 1) {
      level = compose_expansion(cols, level);
    }
    for (std::size_t i = 1; i < level.size(); ++i) {
      out.emplace(level[i - 1], level[i]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closure of the Rudin-Shapiro columns is the displayed 8-map set") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  std::set<FiniteMap> expected{
      map_of(rs, "adad"), map_of(rs, "dada"), map_of(rs, "aadd"),
      map_of(rs, "ddaa"), map_of(rs, "bcbc"), map_of(rs, "cbcb"),
      map_of(rs, "bbcc"), map_of(rs, "ccbb")};
  CHECK(S.size() == 8);
  CHECK(std::set<FiniteMap>(S.elements().begin(), S.elements().end()) == expected);
}

TEST_CASE("closure examples") {
  Substitution tm = ektest::thue_morse_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(tm));
  CHECK(S.size() == 2);

  // period doubling columns (a,a) and (b,a), closed by brute force:
  // c1c0 = (b,b) and c1c1 = id join the generators.
  FiniteMap c0(std::vector<std::uint8_t>{0, 0});
  FiniteMap c1(std::vector<std::uint8_t>{1, 0});
  TransformationSemigroup P = TransformationSemigroup::close({c0, c1});
  std::set<FiniteMap> got(P.elements().begin(), P.elements().end());
  CHECK(got == std::set<FiniteMap>{c0, c1, c1.after(c0), c1.after(c1)});
  CHECK(P.size() == 4);
}

TEST_CASE("closure invariant: products stay inside, generators included") {
  for (const Substitution& s :
       {ektest::rudin_shapiro_simplified(), ektest::thue_morse_simplified(),
        ektest::five_letter_bijective(), ektest::period_doubling_squared()}) {
    TransformationSemigroup S = TransformationSemigroup::close(expand_columns(s));
    for (const FiniteMap& g : S.generators()) {
      CHECK(S.contains(g));
    }
    for (std::uint32_t i = 0; i < S.size(); ++i) {
      for (std::uint32_t j = 0; j < S.size(); ++j) {
        std::uint32_t k = S.product(i, j);
        REQUIRE(k < S.size());
        CHECK(S.elements()[k] == S.elements()[i].after(S.elements()[j]));
      }
    }
  }
}

TEST_CASE("idempotents") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  std::vector<FiniteMap> idem = idempotents(S);
  for (const FiniteMap& c : expand_columns(rs)) {
    CHECK(std::find(idem.begin(), idem.end(), c) != idem.end());
  }

  FiniteMap tau(std::vector<std::uint8_t>{1, 0});
  TransformationSemigroup T = TransformationSemigroup::close({tau});
  CHECK(idempotents(T) == std::vector<FiniteMap>{FiniteMap::identity(2)});

  FiniteMap constant(std::vector<std::uint8_t>{0, 0, 0});
  TransformationSemigroup C = TransformationSemigroup::close({constant});
  CHECK(idempotents(C) == std::vector<FiniteMap>{constant});
}

TEST_CASE("h_class_group at the Rudin-Shapiro idempotents") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  std::vector<FiniteMap> cols = expand_columns(rs);

  HClassGroup h_plus = h_class_group(S, cols[0]);
  CHECK(h_plus.members ==
        std::vector<FiniteMap>{map_of(rs, "adad"), map_of(rs, "dada")});

  HClassGroup h_pm = h_class_group(S, cols[2]);
  REQUIRE(h_pm.members.size() == 2);
  CHECK(std::find(h_pm.members.begin(), h_pm.members.end(),
                  map_of(rs, "ddaa")) != h_pm.members.end());

  Substitution tm = ektest::thue_morse_simplified();
  TransformationSemigroup T = TransformationSemigroup::close(expand_columns(tm));
  HClassGroup whole = h_class_group(T, FiniteMap::identity(2));
  CHECK(whole.members.size() == 2);
}

TEST_CASE("h_class_group refuses non-minimal idempotents") {
  FiniteMap id = FiniteMap::identity(2);
  FiniteMap constant(std::vector<std::uint8_t>{0, 0});
  TransformationSemigroup S = TransformationSemigroup::close({id, constant});
  try {
    h_class_group(S, id);
    FAIL("expected NotMinimalRank");
  } catch (const DomainError& e) {
    CHECK(e.code() == errc::not_minimal_rank);
  }
}

TEST_CASE("every member of a minimal H-class has exactly one inverse") {
  for (const Substitution& s :
       {ektest::rudin_shapiro_simplified(), ektest::five_letter_bijective()}) {
    TransformationSemigroup S = TransformationSemigroup::close(expand_columns(s));
    HClassGroup g = h_class_group(S, omega_power(expand_columns(s)[0]));
    for (const FiniteMap& f : g.members) {
      int inverses = 0;
      for (const FiniteMap& h : g.members) {
        if (f.after(h) == g.identity && h.after(f) == g.identity) {
          ++inverses;
        }
      }
      CHECK(inverses == 1);
      CHECK(g.inverse_of(g.inverse_of(f)) == f);
    }
  }
}

TEST_CASE("minimal H-classes all have the same size") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  std::set<std::size_t> sizes;
  for (const FiniteMap& e : idempotents(S)) {
    if (e.rank() == S.min_rank()) {
      sizes.insert(h_class_group(S, e).members.size());
    }
  }
  CHECK(sizes.size() == 1);
}

TEST_CASE("corner idempotents of the worked example") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  std::vector<FiniteMap> cols = expand_columns(rs);
  FiniteMap e_plus = cols[0];
  FiniteMap e_minus = cols[3];
  CHECK(corner_idempotent(S, e_plus, e_minus) == cols[2]);  // e_{+-} = theta_2
  CHECK(corner_idempotent(S, e_minus, e_plus) == cols[1]);  // e_{-+} = theta_1

  Substitution tm = ektest::thue_morse_simplified();
  TransformationSemigroup T = TransformationSemigroup::close(expand_columns(tm));
  FiniteMap id = FiniteMap::identity(2);
  CHECK(corner_idempotent(T, id, id) == id);
}

TEST_CASE("corner_idempotent reports an empty corner class") {
  FiniteMap id = FiniteMap::identity(2);
  FiniteMap constant(std::vector<std::uint8_t>{0, 0});
  TransformationSemigroup S = TransformationSemigroup::close({id, constant});
  try {
    corner_idempotent(S, id, constant);
    FAIL("expected NoSuchIdempotent");
  } catch (const DomainError& e) {
    CHECK(e.code() == errc::no_such_idempotent);
  }
}

TEST_CASE("Green's relations are exact on the minimal-rank class") {
  for (const Substitution& s :
       {ektest::rudin_shapiro_simplified(), ektest::thue_morse_simplified(),
        ektest::five_letter_bijective()}) {
    TransformationSemigroup S = TransformationSemigroup::close(expand_columns(s));
    REQUIRE(S.size() <= 64);
    auto right_ideal = [&](std::uint32_t x) {
      std::set<std::uint32_t> r{x};
      for (std::uint32_t a = 0; a < S.size(); ++a) {
        r.insert(S.product(x, a));
      }
      return r;
    };
    auto left_ideal = [&](std::uint32_t x) {
      std::set<std::uint32_t> r{x};
      for (std::uint32_t a = 0; a < S.size(); ++a) {
        r.insert(S.product(a, x));
      }
      return r;
    };
    for (std::uint32_t i = 0; i < S.size(); ++i) {
      for (std::uint32_t j = 0; j < S.size(); ++j) {
        const FiniteMap& f = S.elements()[i];
        const FiniteMap& g = S.elements()[j];
        if (f.rank() != S.min_rank() || g.rank() != S.min_rank()) {
          continue;
        }
        CHECK((right_ideal(i) == right_ideal(j)) == (f.image() == g.image()));
        CHECK((left_ideal(i) == left_ideal(j)) ==
              (f.kernel_signature() == g.kernel_signature()));
      }
    }
  }
}

TEST_CASE("consecutive pairs: fixed point equals direct power enumeration") {
  for (const Substitution& s :
       {ektest::thue_morse_simplified(), ektest::rudin_shapiro_simplified(),
        ektest::five_letter_bijective(), ektest::period_doubling_squared()}) {
    ConsecutivePairSet cp = consecutive_pairs(expand_columns(s));
    std::set<std::pair<FiniteMap, FiniteMap>> closure(cp.pairs.begin(),
                                                      cp.pairs.end());
    std::set<std::pair<FiniteMap, FiniteMap>> direct = pairs_by_powers(s, 4);
    // The direct route has stabilized by depth 4 on this corpus.
    CHECK(direct == pairs_by_powers(s, 5));
    CHECK(closure == direct);
  }
}

TEST_CASE("consecutive pairs of simplified Thue-Morse") {
  Substitution tm = ektest::thue_morse_simplified();
  FiniteMap id = FiniteMap::identity(2);
  FiniteMap tau = map_of(tm, "ba");
  ConsecutivePairSet cp = consecutive_pairs(expand_columns(tm));
  CHECK(cp.contains(id, tau));
  CHECK(cp.contains(tau, tau));
  CHECK(cp.contains(tau, id));
  // The squared expansion id|t|t|id|t|id|id|t|... also makes (id, id)
  // consecutive, at positions 5 and 6.
  CHECK(cp.contains(id, id));
  CHECK(cp.pairs.size() == 4);
}

TEST_CASE("consecutive pairs of Rudin-Shapiro contain the displayed ones") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  std::vector<FiniteMap> cols = expand_columns(rs);
  ConsecutivePairSet cp = consecutive_pairs(cols);
  CHECK(cp.contains(cols[1].after(cols[0]), cols[2].after(cols[0])));
  CHECK(cp.contains(cols[3].after(cols[0]), cols[0].after(cols[1])));
}

TEST_CASE("level-one pairs are the base of the recursion") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  std::vector<FiniteMap> cols = expand_columns(rs);
  ConsecutivePairSet cp = consecutive_pairs(cols);
  for (std::size_t j = 1; j < cols.size(); ++j) {
    CHECK(cp.contains(cols[j - 1], cols[j]));
  }
}

TEST_CASE("normal closure") {
  Substitution five = ektest::five_letter_bijective();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(five));
  HClassGroup g = h_class_group(S, FiniteMap::identity(3));
  REQUIRE(g.members.size() == 6);

  FiniteMap three_cycle(std::vector<std::uint8_t>{1, 2, 0});
  std::vector<FiniteMap> a3 = normal_closure(g, {three_cycle});
  CHECK(a3.size() == 3);
  for (const FiniteMap& f : a3) {
    CHECK(f.is_permutation());
  }

  CHECK(normal_closure(g, {FiniteMap::identity(3)}).size() == 1);

  FiniteMap transposition(std::vector<std::uint8_t>{1, 0, 2});
  CHECK(normal_closure(g, {transposition}).size() == 6);

  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup R = TransformationSemigroup::close(expand_columns(rs));
  HClassGroup s2 = h_class_group(R, expand_columns(rs)[0]);
  CHECK(normal_closure(s2, {map_of(rs, "dada")}).size() == 2);
}
