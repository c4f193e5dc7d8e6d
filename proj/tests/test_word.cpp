#include <catch_amalgamated.hpp>

#include "fbword/word.hpp"

using namespace fbword;
using namespace fbword::literals;

TEST_CASE("parse_word reads tokens with greedy digits", "[word]") {
  Word u = parse_word("aat1aabbt2bb");
  CHECK(u.size() == 10);
  CHECK(u.nonlinear_variables() == VariableSet{Variable("a"), Variable("b")});
  CHECK(u.linear_variables() == VariableSet{Variable("t1"), Variable("t2")});
  CHECK(u.to_string() == "aat1aabbt2bb");
  CHECK(parse_word("a a  t1\tb") == parse_word("aat1b"));
}

TEST_CASE("empty text is the empty word", "[word]") {
  Word e = parse_word("");
  CHECK(e.empty());
  CHECK(e.content().empty());
}

TEST_CASE("bare t names fresh linear variables", "[word]") {
  Word u = parse_word("atbta");
  CHECK(u.occurrences(Variable("a")) == 2);
  CHECK(u.is_linear(Variable("b")));
  CHECK(u[1] != u[3]);
  CHECK(u.is_linear(u[1]));
  CHECK(u.is_linear(u[3]));

  Word plain = parse_word("atbta", false);
  CHECK(plain.occurrences(Variable("t")) == 2);
}

TEST_CASE("fresh names skip names already present", "[word]") {
  Word u = parse_word("t1 t a t");
  CHECK(u.content().size() == 4);
  CHECK(u[1] == Variable("t2"));
  CHECK(u[3] == Variable("t3"));
  // Serialization round-trips.
  CHECK(parse_word(u.to_string()) == u);
}

TEST_CASE("malformed tokens are rejected with an offset", "[word]") {
  CHECK_THROWS_AS(parse_word("aB"), parse_error);
  CHECK_THROWS_AS(parse_word("1a"), parse_error);
  try {
    parse_word("ab 3");
    FAIL("expected a parse error");
  } catch (parse_error const& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("restrict deletes the other variables", "[word]") {
  Word u = "xt1xyt2y"_w;
  CHECK(restrict(u, {Variable("x")}) == "xx"_w);
  CHECK(restrict(u, {Variable("x"), Variable("y")}) == "xxyy"_w);
  CHECK(restrict(u, {}).empty());
  CHECK(restrict(u, u.content()) == u);
}

TEST_CASE("blocks split on linear variables", "[word]") {
  auto dec = blocks("aat1aabbt2bb"_w);
  REQUIRE(dec.blocks.size() == 3);
  CHECK(dec.blocks[0] == "aa"_w);
  CHECK(dec.blocks[1] == "aabb"_w);
  CHECK(dec.blocks[2] == "bb"_w);
  CHECK(dec.skeleton == std::vector<Variable>{Variable("t1"), Variable("t2")});
  CHECK(dec.reassemble() == "aat1aabbt2bb"_w);

  auto empty = blocks("t1t2"_w);
  CHECK(empty.blocks == std::vector<Word>(3));

  auto one = blocks("aabb"_w);
  CHECK(one.blocks == std::vector<Word>{"aabb"_w});
}

TEST_CASE("block-n-simple", "[word]") {
  Word u = "aabbat1bcbct2cca"_w;
  CHECK(is_block_n_simple(u, 2));
  CHECK_FALSE(is_block_n_simple(u, 1));
  CHECK(is_block_n_simple("t1t2t3"_w, 0));
  CHECK_FALSE(is_block_n_simple("aa"_w, 0));
}

TEST_CASE("factors and closure", "[word]") {
  CHECK(is_factor("ab"_w, "aabb"_w));
  CHECK_FALSE(is_factor("ba"_w, "aabb"_w));
  CHECK(is_factor(Word(), "ab"_w));
  CHECK(is_factor("ababa"_w, "t1aababaat2"_w));

  CHECK(subword_closure(std::vector<Word>{"aba"_w})
        == std::set<Word>{Word(), "a"_w, "b"_w, "ab"_w, "ba"_w, "aba"_w});
  CHECK(subword_closure(std::vector<Word>{Word()}) == std::set<Word>{Word()});
  CHECK(subword_closure(std::vector<Word>{"ab"_w, "ba"_w})
        == std::set<Word>{Word(), "a"_w, "b"_w, "ab"_w, "ba"_w});
}

TEST_CASE("primitive roots and commutation", "[word]") {
  CHECK(primitive_root("abab"_w) == "ab"_w);
  CHECK(primitive_root("aaa"_w) == "a"_w);
  CHECK(primitive_root("aba"_w) == "aba"_w);
  CHECK_THROWS(primitive_root(Word()));
  CHECK(commutes("ab"_w, "abab"_w));
  CHECK_FALSE(commutes("a"_w, "b"_w));
  CHECK(commutes(Word(), "ab"_w));
}

TEST_CASE("tilde transform", "[word]") {
  Variable a("a");
  Variable b("b");
  CHECK(tilde_transform("ab"_w, a, b) == parse_word("a t b"));
  CHECK(tilde_transform("cab"_w, a, b) == parse_word("t a t b"));
  CHECK(tilde_transform("aba"_w, a, b) == parse_word("a t b a"));
  CHECK(tilde_transform("ba"_w, a, b) == "ba"_w);
  // Fresh names avoid the names of u.
  Word u = tilde_transform("t1ab"_w, a, b);
  CHECK(u.size() == 4);
  CHECK(u.content().size() == 4);
  CHECK_THROWS(tilde_transform("ab"_w, a, a));
}

TEST_CASE("occurrence references", "[word]") {
  Word u = "xt1xyt2y"_w;
  auto c = occurrence_at(u, 2);
  CHECK(c.variable == Variable("x"));
  CHECK(c.ordinal == 2);
  CHECK_FALSE(is_first_occurrence(c));
  CHECK(is_last_occurrence(u, c));
  CHECK_THROWS(occurrence_at(u, 6));
}

TEST_CASE("shortlex order", "[word]") {
  CHECK("b"_w < "aa"_w);
  CHECK("ab"_w < "ba"_w);
  CHECK(Word() < "a"_w);
}
