#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fbword/fbword.hpp"

using namespace fbword;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  struct Criterion {
    int                      number;
    char const*              title;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };

  Outcome from_sweep(SweepReport const& r, std::size_t expected_total) {
    Outcome o;
    o.detail = std::to_string(r.total) + " words, "
               + std::to_string(r.failures.size()) + " failures, "
               + std::to_string(r.inconclusive) + " inconclusive";
    o.ok = r.ok() && r.inconclusive == 0
           && (expected_total == 0 || r.total == expected_total);
    if (!r.failures.empty()) {
      auto const& f = r.failures.front();
      o.detail += "; first: " + f.word.to_string() + " "
                  + std::string(to_string(f.check)) + ": " + f.detail;
    }
    return o;
  }

  Outcome worked_example() {
    Outcome o;
    Word const u = parse_word("aat1aabbt2bb");
    o.ok &= classify_word(u).verdict == Verdict::nfb;
    o.ok &= classify_word(parse_word("aataabbtb")).verdict == Verdict::fb;
    std::size_t factors = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t len = 1; i + len <= u.size(); ++len) {
        if (i == 0 && len == u.size()) {
          continue;
        }
        ++factors;
        auto const f = u.subword(i, len);
        if (classify_word(f).verdict != Verdict::fb) {
          o.ok = false;
          o.detail += "factor " + f.to_string() + " is not FB; ";
        }
      }
    }
    o.detail += std::to_string(factors) + " proper factors checked";
    return o;
  }

  Outcome two_letter() {
    SweepConfig config;
    config.max_length = 8;
    config.checks     = {SweepCheck::two_letter};
    return from_sweep(run_sweep(config), 510);
  }

  Outcome firstsim() {
    SweepConfig config;
    config.max_length  = 7;
    config.max_markers = 2;
    config.checks      = {SweepCheck::firstsim};
    return from_sweep(run_sweep(config), 0);
  }

  Outcome witnesses() {
    struct Case {
      char const*              word;
      WitnessFamily            family;
      std::vector<std::size_t> ns;
    };
    Case const cases[] = {
        {"abtab", WitnessFamily::row1, {2, 3}},
        {"abtba", WitnessFamily::row2, {2, 3}},
        {"abbatb", WitnessFamily::abba_case1, {1, 2}},
        {"ababa", WitnessFamily::ababa, {1, 2}},
    };
    Outcome     o;
    std::size_t identities = 0;
    for (auto const& c : cases) {
      FamilySpec spec;
      spec.family = c.family;
      auto const report
          = verify_family({parse_word(c.word)}, spec, c.ns);
      for (auto const& check : report.checks) {
        ++identities;
        if (!check.verdict.holds) {
          o.ok = false;
          o.detail += check.identity.to_string() + " fails on " + c.word
                      + "; ";
        }
      }
    }
    o.detail += std::to_string(identities) + " identities";
    return o;
  }

  Outcome route_agreement() {
    SweepConfig config;
    config.max_length  = 9;
    config.max_markers = 3;
    config.checks      = {SweepCheck::route_agreement};
    return from_sweep(run_sweep(config), 0);
  }

  Outcome power_consistency() {
    SweepConfig config;
    config.max_length  = 6;
    config.max_markers = 2;
    Variable const x("x");
    Variable const y("y");
    Outcome        o;
    std::size_t    words = 0;
    for (auto const& w : sweep_words(config)) {
      ++words;
      std::vector<Word> const single{w};
      DilworthMonoid const    monoid(single);
      std::size_t const       m = max_power_m(single);
      if (m >= 1) {
        auto const probe = power(x, m) + power(y, m);
        if (bounded_isoterm(monoid, probe, 2 * m + 2).found_partner()) {
          o.ok = false;
          o.detail += "partner for " + probe.to_string() + " over "
                      + w.to_string() + "; ";
        }
      }
      auto const next = power(x, m + 1) + power(y, m + 1);
      if (!bounded_isoterm(monoid, next, 2 * m + 4).found_partner()) {
        o.ok = false;
        o.detail += "no partner for " + next.to_string() + " over "
                    + w.to_string() + "; ";
      }
    }
    o.detail += std::to_string(words) + " words";
    return o;
  }

  Word random_word(std::mt19937& rng, std::vector<Variable> const& letters,
                   std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) {
      w.push_back(letters[pick(rng)]);
    }
    return w;
  }

  Outcome injective_images() {
    std::mt19937                rng(2024);
    std::vector<Variable> const ab{Variable("a"), Variable("b")};
    std::vector<Variable> const xy{Variable("x"), Variable("y")};
    Outcome                     o;
    std::size_t                 trials = 0;
    while (trials < 10'000) {
      Word const p = random_word(rng, ab, 1, 4);
      Word const q = random_word(rng, ab, 1, 4);
      if (commutes(p, q)) {
        continue;
      }
      Word const u = random_word(rng, xy, 0, 6);
      Word const v = random_word(rng, xy, 0, 6);
      if (u == v) {
        continue;
      }
      ++trials;
      Substitution theta;
      theta.set(xy[0], p);
      theta.set(xy[1], q);
      if (theta.apply(u) == theta.apply(v)) {
        o.ok = false;
        o.detail += u.to_string() + " and " + v.to_string() + " collide; ";
      }
    }
    o.detail += std::to_string(trials) + " trials";
    return o;
  }

  Outcome isoterm_pairs() {
    SweepConfig config;
    config.max_length  = 6;
    config.max_markers = 2;
    auto const                                 pool = sweep_words(config);
    std::mt19937                               rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::pair<Word, Word> const pairs[] = {
        {catalog::xtxyty(), catalog::xtyxty()},
        {catalog::xytxty(), catalog::yxtxty()},
        {catalog::xtytxy(), catalog::xtytyx()},
    };
    Outcome o;
    for (int i = 0; i < 50; ++i) {
      Word const           w = pool[pick(rng)];
      DilworthMonoid const monoid(std::vector<Word>{w});
      for (auto const& [left, right] : pairs) {
        bool const l = bounded_isoterm(monoid, left, left.size() + 2)
                           .found_partner();
        bool const r = bounded_isoterm(monoid, right, right.size() + 2)
                           .found_partner();
        if (l != r) {
          o.ok = false;
          o.detail += left.to_string() + " vs " + right.to_string()
                      + " over " + w.to_string() + "; ";
        }
      }
    }
    o.detail += "50 words, 3 pairs";
    return o;
  }
}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "worked example", 1, worked_example},
      {2, "two-letter words", 1, two_letter},
      {3, "syntactic and exact identity checks agree", 60, firstsim},
      {4, "witness identities hold", 300, witnesses},
      {5, "block and isoterm routes agree", 600, route_agreement},
      {6, "power bound and isoterm search agree", 60, power_consistency},
      {7, "non-commuting images are injective", 60, injective_images},
      {8, "paired words share isoterm status", 60, isoterm_pairs},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const started = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    bool const in_time = seconds < c.budget_seconds;
    bool const pass    = o.ok && in_time;
    failed += !pass;
    std::printf("%s %d %s: %s (%.2f s, budget %.0f s%s)\n",
                pass ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(),
                seconds, c.budget_seconds, in_time ? "" : ", exceeded");
  }
  return failed == 0 ? 0 : 1;
}
