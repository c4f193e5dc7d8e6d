#include <catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <set>
#include <string>

#include "fbword/fbword.hpp"

using namespace fbword;
using namespace fbword::literals;

namespace {
  std::string random_string(std::mt19937& rng, std::string const& alphabet,
                            std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(len(rng), ' ');
    for (auto& c : s) {
      c = alphabet[pick(rng)];
    }
    return s;
  }

  std::set<std::string> factors_of(std::string const& s) {
    std::set<std::string> result{""};
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 1; i + j <= s.size(); ++j) {
        result.insert(s.substr(i, j));
      }
    }
    return result;
  }

  // S(W) on plain strings: an element is a factor, or nullopt for zero.
  bool brute_satisfies(std::string const& w, std::string const& lhs,
                       std::string const& rhs) {
    auto const                 closure = factors_of(w);
    std::vector<std::optional<std::string>> elements(closure.begin(),
                                                     closure.end());
    elements.push_back(std::nullopt);
    std::string vars;
    for (char c : lhs + rhs) {
      if (vars.find(c) == std::string::npos) {
        vars += c;
      }
    }
    auto eval = [&](std::string const& side,
                    std::vector<std::size_t> const& choice) {
      std::optional<std::string> value = std::string();
      for (char c : side) {
        auto const& e = elements[choice[vars.find(c)]];
        if (!e) {
          return std::optional<std::string>();
        }
        *value += *e;
        if (!closure.contains(*value)) {
          return std::optional<std::string>();
        }
      }
      return value;
    };
    std::vector<std::size_t> choice(vars.size(), 0);
    while (true) {
      if (eval(lhs, choice) != eval(rhs, choice)) {
        return false;
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == elements.size()) {
        choice[i++] = 0;
      }
      if (i == choice.size()) {
        return true;
      }
    }
  }

  Word from_letters(std::string const& s) {
    Word w;
    for (char c : s) {
      w.push_back(Variable(std::string(1, c)));
    }
    return w;
  }

  std::size_t brute_match_count(std::string const& pattern,
                                std::string const& target) {
    auto const               images = factors_of(target);
    std::vector<std::string> pool(images.begin(), images.end());
    std::string              vars;
    for (char c : pattern) {
      if (vars.find(c) == std::string::npos) {
        vars += c;
      }
    }
    std::vector<std::size_t> choice(vars.size(), 0);
    std::size_t              count = 0;
    while (true) {
      std::string image;
      for (char c : pattern) {
        image += pool[choice[vars.find(c)]];
      }
      count += image == target;
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == pool.size()) {
        choice[i++] = 0;
      }
      if (i == choice.size()) {
        return count;
      }
    }
  }

  std::string brute_root(std::string const& s) {
    for (std::size_t p = 1; p <= s.size(); ++p) {
      if (s.size() % p != 0) {
        continue;
      }
      std::string r;
      for (std::size_t k = 0; k < s.size() / p; ++k) {
        r += s.substr(0, p);
      }
      if (r == s) {
        return s.substr(0, p);
      }
    }
    return s;
  }
}  // namespace

TEST_CASE("matcher agrees with brute-force factorisation", "[properties]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    auto const pattern = random_string(rng, "xyz", 1, 4);
    auto const target  = random_string(rng, "ab", 0, 5);
    CAPTURE(pattern, target);
    auto const found
        = match_substitutions(from_letters(pattern), from_letters(target));
    CHECK(found.size() == brute_match_count(pattern, target));
    for (auto const& theta : found) {
      CHECK(theta.apply(from_letters(pattern)) == from_letters(target));
    }
  }
}

TEST_CASE("oracle agrees with exhaustive evaluation", "[properties]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto const w   = random_string(rng, "ab", 1, 5);
    auto const lhs = random_string(rng, "xyz", 1, 6);
    auto const rhs = trial % 3 == 0 ? std::string(lhs.rbegin(), lhs.rend())
                                    : random_string(rng, "xyz", 1, 6);
    CAPTURE(w, lhs, rhs);
    std::vector<Word> const words{from_letters(w)};
    Identity const          id{from_letters(lhs), from_letters(rhs)};
    auto const              verdict = satisfies_identity(words, id);
    CHECK(verdict.holds == brute_satisfies(w, lhs, rhs));
    if (!verdict.holds) {
      REQUIRE(verdict.refutation);
      CHECK(separates(DilworthMonoid(words), id, *verdict.refutation));
    }
  }
}

TEST_CASE("left and right identities are dual under reversal",
          "[properties]") {
  SweepConfig config;
  config.max_length  = 7;
  config.max_markers = 2;
  for (auto const& u : sweep_words(config)) {
    CAPTURE(u.to_string());
    CHECK(in_max(u, SigmaSet{Sigma::s1}) == in_max(u.reversed(), SigmaSet{Sigma::s2}));
    CHECK(in_max(u, SigmaSet{Sigma::smu})
          == in_max(u.reversed(), SigmaSet{Sigma::smu}));
  }
}

TEST_CASE("clause table is the intersection of its members", "[properties]") {
  SweepConfig config;
  config.max_length  = 7;
  config.max_markers = 2;
  for (auto const& u : sweep_words(config)) {
    for (auto const& p : adjacent_nonlinear_pairs(u)) {
      for (auto set : SigmaSet::nonempty_subsets()) {
        bool every = true;
        for (auto s : set.members()) {
          every = every && pair_is_bad(u, p, SigmaSet{s});
        }
        CAPTURE(u.to_string(), set.to_string());
        CHECK(pair_is_bad(u, p, set) == every);
      }
    }
  }
}

TEST_CASE("commuting words share a primitive root", "[properties]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto const base = random_string(rng, "ab", 1, 3);
    auto       u    = trial % 2 == 0 ? base + base : random_string(rng, "ab", 1, 6);
    auto       v    = trial % 4 == 0 ? base : random_string(rng, "ab", 1, 6);
    CAPTURE(u, v);
    CHECK(primitive_root(from_letters(u)) == from_letters(brute_root(u)));
    CHECK(commutes(from_letters(u), from_letters(v)) == (u + v == v + u));
  }
}

TEST_CASE("block decomposition reassembles", "[properties]") {
  SweepConfig config;
  config.max_length  = 8;
  config.max_markers = 3;
  for (auto const& u : sweep_words(config)) {
    auto const d = blocks(u);
    CHECK(d.reassemble() == u);
    CHECK(d.blocks.size() == d.skeleton.size() + 1);
    for (auto const& b : d.blocks) {
      for (auto const& x : b) {
        CHECK(u.occurrences(x) >= 2);
      }
    }
  }
}

TEST_CASE("subword closure is factor-closed", "[properties]") {
  std::vector<Word> const words{"aabab"_w, "bat1b"_w};
  auto const              closure = subword_closure(words);
  for (auto const& e : closure) {
    for (std::size_t i = 0; i <= e.size(); ++i) {
      for (std::size_t j = 0; i + j <= e.size(); ++j) {
        CHECK(closure.contains(e.subword(i, j)));
      }
    }
  }
  auto expected = factors_of("aabab");
  expected.merge(factors_of("bacb"));
  CHECK(closure.size() == expected.size());
}

TEST_CASE("sweep report does not depend on the worker count",
          "[properties]") {
  SweepConfig config;
  config.max_length  = 6;
  config.max_markers = 1;
  config.checks
      = {SweepCheck::two_letter, SweepCheck::hereditary, SweepCheck::route_agreement};
  auto const one = run_sweep(config);
  config.workers = 3;
  auto const three = run_sweep(config);
  CHECK(one.total == three.total);
  CHECK(one.total == sweep_word_count(config));
  CHECK(one.inconclusive == three.inconclusive);
  REQUIRE(one.failures.size() == three.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    CHECK(one.failures[i].word == three.failures[i].word);
  }
}
