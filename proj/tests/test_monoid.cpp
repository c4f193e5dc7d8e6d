#include <catch_amalgamated.hpp>

#include "fbword/monoid.hpp"

using namespace fbword;
using namespace fbword::literals;

TEST_CASE("S({ab})", "[monoid]") {
  DilworthMonoid m(std::vector<Word>{"ab"_w});
  CHECK(m.size() == 5);
  CHECK(m.factors() == std::vector<Word>{Word(), "a"_w, "b"_w, "ab"_w});
  CHECK(m.multiply(m.image("a"_w), m.image("b"_w)) == m.image("ab"_w));
  CHECK(m.multiply(m.image("b"_w), m.image("a"_w)).is_zero());
  CHECK(m.image("ba"_w).is_zero());
}

TEST_CASE("S({ε}) has two elements", "[monoid]") {
  DilworthMonoid m(std::vector<Word>{Word()});
  CHECK(m.size() == 2);
  CHECK(m.elements().size() == 2);
  CHECK(m.image("a"_w).is_zero());
}

TEST_CASE("S({aa})", "[monoid]") {
  DilworthMonoid m(std::vector<Word>{"aa"_w});
  CHECK(m.size() == 4);
  auto a  = m.image("a"_w);
  auto aa = m.multiply(a, a);
  CHECK(aa == m.image("aa"_w));
  CHECK(m.multiply(aa, a).is_zero());
}

TEST_CASE("one is neutral and zero absorbs", "[monoid]") {
  DilworthMonoid m(std::vector<Word>{"abtab"_w});
  for (auto const& e : m.elements()) {
    CHECK(m.multiply(m.one(), e) == e);
    CHECK(m.multiply(e, m.one()) == e);
    CHECK(m.multiply(Element::zero(), e).is_zero());
    CHECK(m.multiply(e, Element::zero()).is_zero());
  }
}

TEST_CASE("multiplication is associative", "[monoid]") {
  DilworthMonoid m(std::vector<Word>{"aabab"_w, "ba"_w});
  auto const     elements = m.elements();
  for (auto const& x : elements) {
    for (auto const& y : elements) {
      for (auto const& z : elements) {
        CHECK(m.multiply(m.multiply(x, y), z) == m.multiply(x, m.multiply(y, z)));
      }
    }
  }
}

TEST_CASE("empty W is rejected", "[monoid]") {
  CHECK_THROWS_AS(DilworthMonoid(std::vector<Word>{}), std::invalid_argument);
}

TEST_CASE("oracle examples", "[monoid]") {
  std::vector<Word> ab{"ab"_w};
  CHECK(satisfies_identity(ab, parse_identity("xyt1xt2y=yxt1xt2y")).holds);
  CHECK_FALSE(find_refutation(ab, parse_identity("xyt1xt2y=yxt1xt2y")));

  std::vector<Word> aa{"aa"_w};
  auto v = satisfies_identity(aa, parse_identity("xx=xxx"));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.refutation);
  CHECK(v.refutation->image(Variable("x")) == "a"_w);
  CHECK(satisfies_identity(aa, parse_identity("xy=yx")).holds);
}

TEST_CASE("refutations separate the sides", "[monoid]") {
  std::vector<Word>    w{"atabtb"_w};
  DilworthMonoid const m(w);
  auto const           smu = parse_identity("xt1xyt2y=xt1yxt2y");
  auto const           v   = satisfies_identity(m, smu);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.refutation);
  CHECK(separates(m, smu, *v.refutation));
  CHECK(v.refutation->image(Variable("x")) == "a"_w);
  CHECK(v.refutation->image(Variable("y")) == "b"_w);
}

TEST_CASE("content mismatch is refuted with a zero", "[monoid]") {
  std::vector<Word>    w{"ab"_w};
  DilworthMonoid const m(w);
  auto const           id = parse_identity("xy=x");
  auto const           v  = satisfies_identity(m, id);
  REQUIRE_FALSE(v.holds);
  CHECK(separates(m, id, *v.refutation));
}

TEST_CASE("bounded isoterm search", "[monoid]") {
  auto xy = bounded_isoterm(std::vector<Word>{"aa"_w}, "xy"_w, 4);
  REQUIRE(xy.found_partner());
  CHECK(*xy.partner == "yx"_w);

  auto xx = bounded_isoterm(std::vector<Word>{"abab"_w}, "xx"_w, 4);
  CHECK_FALSE(xx.found_partner());
  CHECK(xx.bound == 4);

  auto xytxy
      = bounded_isoterm(std::vector<Word>{"abtab"_w}, "xyt1xy"_w, 7);
  CHECK_FALSE(xytxy.found_partner());

  CHECK_THROWS(bounded_isoterm(std::vector<Word>{"ab"_w}, "xyx"_w, 2));
}

TEST_CASE("partners satisfy the identity", "[monoid]") {
  std::vector<Word> w{"ab"_w};
  auto              v = bounded_isoterm(w, "xyx"_w, 4);
  REQUIRE(v.found_partner());
  CHECK(*v.partner != "xyx"_w);
  CHECK(v.partner->content() == VariableSet{Variable("x"), Variable("y")});
  CHECK(satisfies_identity(w, {"xyx"_w, *v.partner}).holds);
}
