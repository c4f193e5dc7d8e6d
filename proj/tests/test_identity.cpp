#include <catch_amalgamated.hpp>

#include "fbword/identity.hpp"

using namespace fbword;
using namespace fbword::literals;

TEST_CASE("parse_identity accepts the three separators", "[identity]") {
  auto id = parse_identity("xyt1xt2y=yxt1xt2y");
  CHECK(id.lhs == "xyt1xt2y"_w);
  CHECK(id.rhs == "yxt1xt2y"_w);
  CHECK(parse_identity("xy ~ yx") == parse_identity("xy=yx"));
  CHECK(parse_identity("xy ≈ yx") == parse_identity("xy=yx"));
  CHECK_THROWS_AS(parse_identity("xy"), parse_error);
}

TEST_CASE("the i-th bare t is shared by both sides", "[identity]") {
  auto id = parse_identity("xtxyty = xtyxty");
  CHECK(id == parse_identity("xt1xyt2y=xt1yxt2y"));
  CHECK(id.to_string() == "xt1xyt2y ≈ xt1yxt2y");
}

TEST_CASE("substitution is a morphism", "[identity]") {
  Substitution theta;
  theta.set(Variable("x"), "ab"_w);
  theta.set(Variable("y"), Word());
  CHECK(theta.apply("xyx"_w) == "abab"_w);
  CHECK(theta.apply("xz"_w) == "abz"_w);
  Word u = "xy"_w;
  Word v = "zx"_w;
  CHECK(theta.apply(u + v) == theta.apply(u) + theta.apply(v));
}

TEST_CASE("balance and stability", "[identity]") {
  auto sigma1 = parse_identity("xyt1xt2y=yxt1xt2y");
  CHECK(is_balanced(sigma1));
  CHECK(unstable_pairs(sigma1)
        == std::set<VariablePair>{{Variable("x"), Variable("y")}});
  CHECK(is_stable(sigma1, {Variable("x"), Variable("t1")}));
  CHECK_FALSE(is_balanced(parse_identity("xx=xxx")));
  CHECK(parse_identity("xy=xy").is_trivial());
}

TEST_CASE("block balance", "[identity]") {
  CHECK(is_block_balanced(parse_identity("xt1xyt2y=xt1yxt2y")));
  CHECK_FALSE(is_block_balanced(parse_identity("xyt1xt2y=xt1xyt2y")));
}

TEST_CASE("swapped and reversed identities", "[identity]") {
  auto id = parse_identity("xyt1xt2y=yxt1xt2y");
  CHECK(id.swapped().lhs == id.rhs);
  CHECK(id.reversed() == parse_identity("yt2xt1yx=yt2xt1xy"));
}
