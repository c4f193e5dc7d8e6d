#include <catch_amalgamated.hpp>

#include "fbword/precedence.hpp"

using namespace fbword;
using namespace fbword::literals;

namespace {
  std::vector<Word> single(char const* text) {
    return {parse_word(text)};
  }
}  // namespace

TEST_CASE("xytxy frame", "[precedence]") {
  auto yes = preceq_xytxy(single("abtab"));
  REQUIRE(yes.outcome == Precedence::yes);
  CHECK(*yes.factor == "abtab"_w);
  CHECK(yes.witness->apply(catalog::xytxy()) == *yes.factor);

  CHECK(preceq_xytxy(single("abba")).outcome == Precedence::no);

  auto gap = preceq_xytxy(single("aabtaab"));
  REQUIRE(gap.outcome == Precedence::yes);
  CHECK(*gap.factor == "abtaab"_w);
  CHECK(gap.witness->apply(catalog::xytxy()) == "abtaab"_w);
}

TEST_CASE("xytyx frame", "[precedence]") {
  CHECK(preceq_xytyx(single("abtba")).outcome == Precedence::yes);
  CHECK(preceq_xytyx(single("abab")).outcome == Precedence::no);
  CHECK(preceq_xytyx(single("abcacb")).outcome == Precedence::unknown);
}

TEST_CASE("max power", "[precedence]") {
  CHECK(max_power_m(single("aabb")) == 2);
  CHECK(max_power_m(single("abab")) == 1);
  CHECK(max_power_m(single("ab")) == 1);
  CHECK(max_power_m(single("aaa")) == 0);
  CHECK(max_power_m(single("ababcc")) == 2);
  CHECK(max_power_m(single("abcab")) == 1);
  CHECK(max_power_m(single("ababcdcd")) == 2);

  auto w = max_power_witness(single("t1aaabbbt2"));
  CHECK(w.m == 3);
  CHECK(w.factor == w.base_x.power(3) + w.base_y.power(3));
  CHECK_FALSE(commutes(w.base_x, w.base_y));
}

TEST_CASE("instance probe", "[precedence]") {
  auto yes = preceq_instance(single("aabtb"), "xt1xyt2y"_w);
  REQUIRE(yes.outcome == Precedence::yes);
  CHECK(yes.witness->apply("xt1xyt2y"_w) == *yes.factor);
  CHECK_FALSE(commutes(yes.witness->image(Variable("x")),
                       yes.witness->image(Variable("y"))));

  CHECK(preceq_instance(single("aabb"), "xyt1xy"_w).outcome
        == Precedence::unknown);
  CHECK(preceq_instance(single("abtab"), "xyt1xy"_w).outcome
        == Precedence::yes);
  CHECK_THROWS(preceq_instance(single("ab"), "xyz"_w));
}

TEST_CASE("sigma sides", "[precedence]") {
  CHECK(preceq_sigma_side(single("atabtb"), Sigma::smu).outcome
        == Precedence::yes);
  CHECK(preceq_sigma_side(single("ab"), Sigma::s1).outcome == Precedence::no);
}

TEST_CASE("rendering", "[precedence]") {
  CHECK(to_string(Precedence::yes) == "yes");
  CHECK(to_string(Precedence::no) == "no");
  CHECK(to_string(Precedence::unknown) == "unknown");
}
