#include <set>
#include <stdexcept>

#include "doctest.h"
#include "elliskernel/group_table.hpp"
#include "test_helpers.hpp"

using namespace elliskernel;

TEST_CASE("cyclic and symmetric constructors") {
  GroupTable z6 = GroupTable::cyclic(6);
  CHECK(z6.size() == 6);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.inverse(2) == 4);

  GroupTable s3 = GroupTable::symmetric(3);
  CHECK(s3.size() == 6);
  std::multiset<unsigned> orders;
  for (std::uint16_t a = 0; a < s3.size(); ++a) {
    orders.insert(s3.element_order(a));
  }
  CHECK(orders == std::multiset<unsigned>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("direct products") {
  GroupTable v4 = GroupTable::direct_product(GroupTable::cyclic(2),
                                             GroupTable::cyclic(2));
  CHECK(v4.size() == 4);
  for (std::uint16_t a = 0; a < v4.size(); ++a) {
    CHECK(v4.element_order(a) <= 2);
  }
  CHECK_FALSE(v4.isomorphic_to(GroupTable::cyclic(4)));
}

TEST_CASE("malformed tables are rejected") {
  // Left-zero "multiplication" is associative but has no identity.
  CHECK_THROWS_AS(GroupTable({"x", "y"}, {{0, 0}, {1, 1}}, 0),
                  std::invalid_argument);
  // Identity but missing inverses: min on {0,1}.
  CHECK_THROWS_AS(GroupTable({"0", "1"}, {{0, 0}, {0, 1}}, 1),
                  std::invalid_argument);
}

TEST_CASE("subgroup and normal closures") {
  GroupTable s3 = GroupTable::symmetric(3);
  std::uint16_t cycle = 0, transposition = 0;
  for (std::uint16_t a = 0; a < s3.size(); ++a) {
    if (s3.element_order(a) == 3) {
      cycle = a;
    }
    if (s3.element_order(a) == 2) {
      transposition = a;
    }
  }
  CHECK(s3.subgroup_closure({cycle}).size() == 3);
  CHECK(s3.subgroup_closure({transposition}).size() == 2);
  CHECK(s3.subgroup_closure({cycle, transposition}).size() == 6);
  // The normal closure of a transposition is everything; of a 3-cycle, A3.
  CHECK(s3.normal_closure({transposition}).size() == 6);
  CHECK(s3.normal_closure({cycle}).size() == 3);
}

TEST_CASE("isomorphism search") {
  GroupTable s2 = GroupTable::symmetric(2);
  CHECK(s2.isomorphic_to(GroupTable::cyclic(2)));
  CHECK(GroupTable::symmetric(3).isomorphic_to(GroupTable::symmetric(3)));
  CHECK_FALSE(GroupTable::cyclic(6).isomorphic_to(GroupTable::symmetric(3)));

  int count = 0;
  GroupTable::symmetric(3).for_each_isomorphism(
      GroupTable::symmetric(3), [&](const std::vector<std::uint16_t>&) {
        ++count;
        return false;
      });
  CHECK(count == 6);  // |Aut(S3)| = |Inn(S3)| = 6
}

TEST_CASE("h-class groups convert to tables") {
  Substitution rs = ektest::rudin_shapiro_simplified();
  TransformationSemigroup S = TransformationSemigroup::close(expand_columns(rs));
  HClassGroup h = h_class_group(S, expand_columns(rs)[0]);
  GroupTable g = GroupTable::from_h_class(
      h, [&](const FiniteMap& f) {
        std::string out;
        for (std::uint8_t v : f.table()) {
          out += rs.letter_name(v);
        }
        return out;
      });
  CHECK(g.size() == 2);
  CHECK(g.name(g.identity()) == "adad");
  CHECK(g.isomorphic_to(GroupTable::cyclic(2)));
}
