#include <fstream>
#include <sstream>

#include "doctest.h"
#include "elliskernel/errors.hpp"
#include "elliskernel/json_io.hpp"
#include "test_helpers.hpp"

using namespace elliskernel;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("substitution documents round trip") {
  Substitution rs = substitution_from_json(slurp(ektest::data_file("rudin-shapiro.json")));
  CHECK(rs == ektest::rudin_shapiro());
  CHECK(substitution_from_json(substitution_to_json(rs)) == rs);

  // Letters must be single characters.
  CHECK_THROWS_AS(
      substitution_from_json(R"({"alphabet": ["ab"], "rules": {"ab": "abab"}})"),
      ParseError);
  CHECK_THROWS_AS(substitution_from_json(R"({"alphabet": ["a"]})"), ParseError);
  CHECK_THROWS_AS(
      substitution_from_json(R"({"alphabet": ["a"], "rules": {"a": "ax"}})"),
      ParseError);
  CHECK_THROWS_AS(
      substitution_from_json(R"({"alphabet": ["a"], "rules": {"a": ""}})"),
      ParseError);
  CHECK_THROWS_AS(substitution_from_json("not json"), ParseError);
}

TEST_CASE("group specs") {
  GroupTable z2 = group_from_json(slurp(ektest::data_file("z2.json")));
  CHECK(z2.size() == 2);
  GroupTable s3 = group_from_json(slurp(ektest::data_file("s3.json")));
  CHECK(s3.size() == 6);
  GroupTable v4 = group_from_json(slurp(ektest::data_file("s2xs2.json")));
  CHECK(v4.size() == 4);
  GroupTable klein = group_from_json(slurp(ektest::data_file("klein-table.json")));
  CHECK(klein.size() == 4);
  CHECK(klein.isomorphic_to(v4));

  CHECK(group_from_json(group_to_json(s3)).size() == 6);

  // Axioms are validated at load.
  CHECK_THROWS_AS(group_from_json(R"({"elements": ["e", "x"],
    "table": [["e", "x"], ["x", "x"]], "identity": "e"})"),
                  ParseError);
}

TEST_CASE("cocycle documents") {
  Substitution pd2 = ektest::period_doubling_squared();
  GroupTable z2 = GroupTable::cyclic(2);
  Cocycle q = cocycle_from_json(slurp(ektest::data_file("pd2-z2-cocycle.json")), pd2, z2);
  CHECK(q.assignment == std::vector<std::uint16_t>{1, 0});
  CHECK(cocycle_from_json(cocycle_to_json(pd2, z2, q), pd2, z2) == q);

  CHECK_THROWS_AS(cocycle_from_json(R"({"q": {"a": "1"}})", pd2, z2), ParseError);
  CHECK_THROWS_AS(cocycle_from_json(R"({"q": {"a": "1", "b": "7"}})", pd2, z2),
                  ParseError);
}

TEST_CASE("sturmian parameter documents") {
  SturmianParams p = sturmian_params_from_json(slurp(ektest::data_file("fib-type1.json")));
  CHECK_FALSE(p.generic_kappa());
  CHECK(p.combination()->k == 1);
  CHECK(sturmian_params_from_json(sturmian_params_to_json(p)) == p);

  SturmianParams g =
      sturmian_params_from_json(slurp(ektest::data_file("generic-kappa.json")));
  CHECK(g.generic_kappa());
  CHECK(sturmian_params_from_json(sturmian_params_to_json(g)) == g);

  CHECK_THROWS_AS(sturmian_params_from_json(
                      R"({"alpha": {"p":1,"q":0,"r":3,"d":1}, "kappa": {"m":1,"n":0,"k":1}})"),
                  ParseError);  // rational rotation
}

TEST_CASE("kernel reports round trip losslessly and deterministically") {
  for (const Substitution& s :
       {ektest::rudin_shapiro(), ektest::thue_morse(),
        ektest::five_letter_bijective()}) {
    KernelReport rep = kernel_report(s);
    std::string one = kernel_report_to_json(rep, true);
    std::string two = kernel_report_to_json(kernel_report(s), true);
    CHECK(one == two);  // byte-identical across runs

    KernelReport back = kernel_report_from_json(one);
    CHECK(kernel_report_to_json(back, true) == one);

    // The parsed report carries the same comparison-relevant content.
    CHECK(back.mef == rep.mef);
    CHECK(back.full_symmetric == rep.full_symmetric);
    CHECK(compare_kernels(back, rep).verdict ==
          KernelVerdict::algebraically_isomorphic);
  }
}

TEST_CASE("comparison documents") {
  KernelReport a = kernel_report(ektest::rudin_shapiro());
  KernelReport b = kernel_report(ektest::thue_morse());
  KernelComparison c = compare_kernels(a, b);
  std::string json = comparison_to_json(c, a, b, true);
  CHECK(json.find("AlgebraicallyIsomorphicKernels") != std::string::npos);
  CHECK(render_human(json).find("verdict") != std::string::npos);

  KernelReport left, right;
  KernelComparison back = comparison_from_json(json, &left, &right);
  CHECK(back.verdict == c.verdict);
  CHECK(back.reason == c.reason);
  CHECK(comparison_to_json(back, left, right, true) == json);
}

TEST_CASE("cover results round trip") {
  Substitution pd2 = ektest::period_doubling_squared();
  GroupTable z2 = GroupTable::cyclic(2);
  Cocycle q;
  q.assignment = {1, 0};
  CoverResult c = build_cover(pd2, z2, q);
  std::vector<WordPair> pairs = asymptotic_pair_words(pd2, 32);
  cover_invariants(c, pairs, 1);

  std::string json = cover_result_to_json(c, pairs, true);
  CoverResult back = cover_result_from_json(json);
  CHECK(back.lifted == c.lifted);
  CHECK(back.q == c.q);
  CHECK(back.nontrivial == c.nontrivial);
  CHECK(back.omega_order == c.omega_order);
  CHECK(back.created_height == c.created_height);
  CHECK(back.cr_lifted == c.cr_lifted);
  CHECK(cover_result_to_json(back, pairs, true) == json);
}

TEST_CASE("human rendering is derived from the JSON document") {
  KernelReport rep = kernel_report(ektest::thue_morse());
  std::string json = kernel_report_to_json(rep, true);
  std::string view = render_human(json);
  CHECK(view.find("mef") != std::string::npos);
  CHECK(view.find("sandwich") != std::string::npos);
  CHECK(view.find("full_symmetric: true") != std::string::npos);
}
