#include "doctest.h"

#include "elliskernel/finite_map.hpp"
#include "elliskernel/substitution.hpp"
#include "test_helpers.hpp"

using namespace elliskernel;

TEST_CASE("composition convention: apply the right factor first") {
  // The global convention (fg)(x) = f(g(x)) pinned by the squared
  // Thue-Morse expansion: columns (id, t) square to (id, t, t, id).
  Substitution tm = ektest::thue_morse();
  std::vector<FiniteMap> cols = expand_columns(tm);
  REQUIRE(cols.size() == 2);
  std::vector<FiniteMap> sq = compose_expansion(cols, cols);
  std::vector<FiniteMap> expected = expand_columns(tm.power(2));
  CHECK(sq == expected);
  CHECK(sq[0] == FiniteMap::identity(2));
  CHECK(sq[1] == cols[1]);
  CHECK(sq[2] == cols[1]);
  CHECK(sq[3] == FiniteMap::identity(2));
}

TEST_CASE("rank, image and kernel signature") {
  FiniteMap f(std::vector<std::uint8_t>{0, 3, 0, 3});
  CHECK(f.rank() == 2);
  CHECK(f.image() == std::vector<std::uint8_t>{0, 3});
  CHECK(f.kernel_signature() == std::vector<std::uint8_t>{0, 1, 0, 1});
  CHECK(f.is_idempotent());
  CHECK_FALSE(f.is_permutation());
}

TEST_CASE("omega power") {
  FiniteMap tau(std::vector<std::uint8_t>{1, 0});
  CHECK(omega_power(tau) == FiniteMap::identity(2));

  FiniteMap three_cycle(std::vector<std::uint8_t>{1, 2, 0});
  CHECK(omega_power(three_cycle) == FiniteMap::identity(3));

  FiniteMap constant_tail(std::vector<std::uint8_t>{1, 1});  // a->b, b->b
  CHECK(omega_power(constant_tail) == constant_tail);
}

TEST_CASE("omega power is idempotent for every self-map of a 3-point set") {
  for (int t0 = 0; t0 < 3; ++t0) {
    for (int t1 = 0; t1 < 3; ++t1) {
      for (int t2 = 0; t2 < 3; ++t2) {
        FiniteMap f(std::vector<std::uint8_t>{
            static_cast<std::uint8_t>(t0), static_cast<std::uint8_t>(t1),
            static_cast<std::uint8_t>(t2)});
        FiniteMap w = omega_power(f);
        CHECK(w.is_idempotent());
        // w is a power of f

        FiniteMap p = f;
        bool seen = false;
        for (int k = 0; k < 32; ++k) {
          if (p == w) {
            seen = true;
            break;
          }
          p = p.after(f);
        }
        CHECK(seen);
      }
    }
  }
}

TEST_CASE("iteration profile") {
  FiniteMap tau(std::vector<std::uint8_t>{1, 0});
  IterationProfile pr = iteration_profile(tau);
  CHECK(pr.tail == 1);
  CHECK(pr.period == 2);

  FiniteMap idem(std::vector<std::uint8_t>{0, 0});
  pr = iteration_profile(idem);
  CHECK(pr.tail == 1);
  CHECK(pr.period == 1);
}
