// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Finite basis decisions for words with at most two non-linear variables,
// and the hereditary test for finite word sets.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "monoid.hpp"
#include "precedence.hpp"
#include "sigma.hpp"
#include "witness.hpp"
#include "word.hpp"

namespace fbword {

  enum class Verdict { fb, nfb, out_of_scope, inconclusive };

  inline std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::fb:
        return "FB";
      case Verdict::nfb:
        return "NFB";
      case Verdict::out_of_scope:
        return "OutOfScope";
      case Verdict::inconclusive:
        return "Inconclusive";
    }
    return "?";
  }

  //! Stable reason codes. New codes may be added; existing names never
  //! change.
  enum class Reason {
    block1_simple,
    first_block_abm,
    last_block_bma,
    single_mixed_block_pattern,
    multiple_mixed_blocks,
    bad_block_shape,
    misplaced_block,
    pattern_pair_present,
    too_many_isoterms,
    not_preceding_xtxyty,
    power_too_small,
    ident_pattern_absent,
    inconclusive,
    out_of_scope
  };

  inline std::string_view to_string(Reason r) {
    switch (r) {
      case Reason::block1_simple:
        return "Block1Simple";
      case Reason::first_block_abm:
        return "FirstBlockABm";
      case Reason::last_block_bma:
        return "LastBlockBmA";
      case Reason::single_mixed_block_pattern:
        return "SingleMixedBlockPattern";
      case Reason::multiple_mixed_blocks:
        return "MultipleMixedBlocks";
      case Reason::bad_block_shape:
        return "BadBlockShape";
      case Reason::misplaced_block:
        return "MisplacedBlock";
      case Reason::pattern_pair_present:
        return "PatternPairPresent";
      case Reason::too_many_isoterms:
        return "TooManyIsoterms";
      case Reason::not_preceding_xtxyty:
        return "NotPrecedingXtxyty";
      case Reason::power_too_small:
        return "PowerTooSmall";
      case Reason::ident_pattern_absent:
        return "IdentPatternAbsent";
      case Reason::inconclusive:
        return "Inconclusive";
      case Reason::out_of_scope:
        return "OutOfScope";
    }
    return "?";
  }

  //! The factor language p^i · 𝔄* · p s · 𝔄* · s^j, where p and s are the
  //! prefix and suffix letters.
  struct GapPattern {
    Variable    prefix_letter{"a"};
    std::size_t prefix_power = 1;
    Variable    suffix_letter{"b"};
    std::size_t suffix_power = 1;

    //! "a^2…ab…b^1" style rendering.
    [[nodiscard]] std::string to_string() const {
      auto const& a = prefix_letter.name();
      auto const& b = suffix_letter.name();
      return a + "^" + std::to_string(prefix_power) + "…" + a + b + "…" + b
             + "^" + std::to_string(suffix_power);
    }

    friend bool operator==(GapPattern const&, GapPattern const&) = default;
  };

  inline bool scan_gap_pattern(Word const& u, GapPattern const& g) {
    auto const& a = g.prefix_letter;
    auto const& b = g.suffix_letter;
    std::size_t const n = u.size();
    // first_prefix_end: smallest end of a factor a^p.
    std::optional<std::size_t> first_prefix_end;
    std::size_t                run = 0;
    std::vector<std::size_t>   suffix_starts;
    for (std::size_t i = 0; i < n; ++i) {
      run = u[i] == a ? run + 1 : 0;
      if (!first_prefix_end && run >= g.prefix_power) {
        first_prefix_end = i + 1;
      }
    }
    if (!first_prefix_end) {
      return false;
    }
    // last_suffix_start: largest start of a factor b^q.
    std::optional<std::size_t> last_suffix_start;
    run = 0;
    for (std::size_t i = n; i-- > 0;) {
      run = u[i] == b ? run + 1 : 0;
      if (!last_suffix_start && run >= g.suffix_power) {
        last_suffix_start = i;
      }
    }
    if (!last_suffix_start) {
      return false;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (u[j] == a && u[j + 1] == b && *first_prefix_end <= j
          && j + 2 <= *last_suffix_start) {
        return true;
      }
    }
    return false;
  }

  struct Classification {
    Verdict                  verdict    = Verdict::fb;
    bool                     hereditary = false;
    Reason                   reason     = Reason::block1_simple;
    std::vector<std::string> trace;
    //! NFB only: the family whose hypotheses were verified for {U}. Empty
    //! means a generic NFB verdict.
    std::optional<WitnessFamily> family;
    //! SingleMixedBlockPattern only.
    std::optional<std::size_t> k;
    std::optional<GapPattern>  absent_pattern;

    [[nodiscard]] bool inconclusive() const noexcept {
      return verdict == Verdict::inconclusive;
    }
  };

  inline std::string family_label(std::optional<WitnessFamily> const& f) {
    return f ? std::string(to_string(*f)) : std::string("GenericNFB");
  }

  namespace detail {
    inline bool is_power_of(Word const& u, Variable const& x) {
      return std::all_of(u.begin(), u.end(),
                         [&x](Variable const& y) { return y == x; });
    }

    //! u = a^n b^m with n, m > 0; returns (n, m).
    inline std::optional<std::pair<std::size_t, std::size_t>>
    two_runs(Word const& u, Variable const& a, Variable const& b) {
      std::size_t const n = run_starting_at(u, 0, a);
      if (n == 0 || n == u.size()) {
        return std::nullopt;
      }
      std::size_t const m = run_starting_at(u, n, b);
      if (m == 0 || n + m != u.size()) {
        return std::nullopt;
      }
      return std::pair{n, m};
    }
  }  // namespace detail

  //! The families whose hypotheses hold for W = {U}, in order of preference.
  inline std::optional<WitnessFamily> identify_witness_family(Word const& u) {
    if (u.nonlinear_variables().size() != 2) {
      return std::nullopt;
    }
    std::vector<Word> const words{u};
    try {
      extract_ababa_decomposition(u);
      return WitnessFamily::ababa;
    } catch (std::invalid_argument const&) {
    }
    try {
      auto d = extract_abba_decomposition(u);
      return d.case_number() == 1 ? WitnessFamily::abba_case1
                                  : WitnessFamily::abba_case2;
    } catch (std::invalid_argument const&) {
    }
    using enum WitnessFamily;
    for (auto f : {row1, row2, row3, row4, row5}) {
      FamilySpec spec;
      spec.family = f;
      if (FamilyReport{f, {}, detail::family_hypotheses(words, spec)}
              .hypotheses_hold()) {
        return f;
      }
    }
    return std::nullopt;
  }

  //! Decides whether S({U}) is finitely based from the block structure of U.
  inline Classification classify_word(Word const& u) {
    Classification result;
    auto&          trace     = result.trace;
    auto const     nonlinear = u.nonlinear_variables();
    if (nonlinear.size() > 2) {
      result.verdict = Verdict::out_of_scope;
      result.reason  = Reason::out_of_scope;
      trace.push_back(std::to_string(nonlinear.size())
                      + " non-linear variables");
      return result;
    }
    auto const dec = blocks(u);
    auto finish_nfb = [&](Reason r) {
      result.verdict    = Verdict::nfb;
      result.hereditary = false;
      result.reason     = r;
      result.family     = identify_witness_family(u);
      trace.push_back("witness family " + family_label(result.family));
      return result;
    };
    auto finish_fb = [&](Reason r, bool hereditary) {
      result.verdict    = Verdict::fb;
      result.hereditary = hereditary;
      result.reason     = r;
      return result;
    };

    std::vector<std::size_t> mixed;
    std::vector<std::size_t> nonempty;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      if (!dec.blocks[i].empty()) {
        nonempty.push_back(i);
      }
      if (dec.blocks[i].content().size() >= 2) {
        mixed.push_back(i);
      }
    }
    if (mixed.empty()) {
      trace.push_back("every block uses at most one variable");
      return finish_fb(Reason::block1_simple, true);
    }
    if (mixed.size() > 1) {
      trace.push_back(std::to_string(mixed.size()) + " blocks use two variables");
      return finish_nfb(Reason::multiple_mixed_blocks);
    }

    std::size_t const index = mixed.front();
    Word const&       block = dec.blocks[index];
    bool const        is_first = nonempty.front() == index;
    bool const        is_last  = nonempty.back() == index;
    std::size_t const start    = dec.block_offsets()[index];
    std::size_t const end      = start + block.size();
    trace.push_back("single mixed block " + block.to_string() + " at block "
                    + std::to_string(index));

    Variable const p = *nonlinear.begin();
    Variable const q = *std::next(nonlinear.begin());
    bool           has_two_runs = false;
    for (auto const& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      auto runs = detail::two_runs(block, a, b);
      if (!runs) {
        continue;
      }
      has_two_runs       = true;
      auto const [n, m]  = *runs;
      if (n == 1 && is_first) {
        trace.push_back("block is " + a.name() + b.name() + "^"
                        + std::to_string(m) + " and the first non-empty block");
        return finish_fb(Reason::first_block_abm, true);
      }
      if (m == 1 && is_last) {
        trace.push_back("block is " + a.name() + "^" + std::to_string(n)
                        + b.name() + " and the last non-empty block");
        return finish_fb(Reason::last_block_bma, true);
      }
    }
    for (auto const& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      auto runs = detail::two_runs(block, a, b);
      if (!runs) {
        continue;
      }
      std::size_t const k = std::min(runs->first, runs->second);
      if (k < 2) {
        continue;
      }
      if (u.suffix_from(end).contains(a) || u.prefix(start).contains(b)) {
        continue;
      }
      GapPattern const left{a, 1, b, k};
      GapPattern const right{a, k, b, 1};
      result.k = k;
      for (auto const& g : {left, right}) {
        if (!scan_gap_pattern(u, g)) {
          trace.push_back("pattern " + g.to_string() + " is absent");
          result.absent_pattern = g;
          return finish_fb(Reason::single_mixed_block_pattern, false);
        }
      }
      trace.push_back("patterns " + left.to_string() + " and "
                      + right.to_string() + " are both present");
      result.k.reset();
      return finish_nfb(Reason::pattern_pair_present);
    }
    if (has_two_runs) {
      trace.push_back("block shape a^n b^m fails the placement conditions");
      return finish_nfb(Reason::misplaced_block);
    }
    trace.push_back("block is not of the form a^n b^m");
    return finish_nfb(Reason::bad_block_shape);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word sets
  ////////////////////////////////////////////////////////////////////////

  enum class HfbForm { block_one_simple, last_last, first_first, none };

  inline std::string_view to_string(HfbForm f) {
    switch (f) {
      case HfbForm::block_one_simple:
        return "block-1-simple";
      case HfbForm::last_last:
        return "last-last";
      case HfbForm::first_first:
        return "first-first";
      case HfbForm::none:
        return "none";
    }
    return "?";
  }

  struct HfbResult {
    bool    hereditary = false;
    HfbForm form       = HfbForm::none;
  };

  //! W is hereditary finitely based iff all adjacent pairs of distinct
  //! non-linear variables in all words are first-first, or all are
  //! last-last.
  inline HfbResult classify_hfb_set(std::span<Word const> words) {
    bool any         = false;
    bool first_first = true;
    bool last_last   = true;
    for (auto const& u : words) {
      for (auto const& pair : adjacent_nonlinear_pairs(u)) {
        any = true;
        first_first &= is_first_occurrence(pair.left)
                       && is_first_occurrence(pair.right);
        last_last &= is_last_occurrence(u, pair.left)
                     && is_last_occurrence(u, pair.right);
      }
    }
    if (!any) {
      return {true, HfbForm::block_one_simple};
    }
    if (last_last) {
      return {true, HfbForm::last_last};
    }
    if (first_first) {
      return {true, HfbForm::first_first};
    }
    return {false, HfbForm::none};
  }

  inline HfbResult classify_hfb_set(std::vector<Word> const& words) {
    return classify_hfb_set(std::span<Word const>(words));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isoterm route
  ////////////////////////////////////////////////////////////////////////

  //! True iff one of a^m…ab…b^1, a^1…ab…b^m is absent from U, where ab is
  //! the first adjacent pair of distinct non-linear variables of U.
  inline bool lemma_ident_check(Word const& u, std::size_t m) {
    auto const pairs = adjacent_nonlinear_pairs(u);
    if (pairs.empty()) {
      throw std::invalid_argument(
          "the word has no adjacent pair of non-linear variables");
    }
    auto const& a = pairs.front().left.variable;
    auto const& b = pairs.front().right.variable;
    return !scan_gap_pattern(u, {a, m, b, 1})
           || !scan_gap_pattern(u, {a, 1, b, m});
  }

  enum class Isoterm { yes, no, unknown };

  namespace detail {
    struct CatalogEntry {
      Word  word;
      Word  partner;
      Sigma sigma;
    };

    inline std::vector<CatalogEntry> main_catalog() {
      return {{catalog::xytxty(), catalog::yxtxty(), Sigma::s1},
              {catalog::xtytxy(), catalog::xtytyx(), Sigma::s2},
              {catalog::xtxyty(), catalog::xtyxty(), Sigma::smu}};
    }

    //! A probe that maps c (or its equivalent partner) into W^c proves
    //! c an isoterm; S(W) ⊨ σ with c as its left side proves the opposite.
    inline Isoterm catalog_isoterm(DilworthMonoid const& monoid,
                                   CatalogEntry const&   entry) {
      if (preceq_instance(monoid.words(), entry.word).outcome
              == Precedence::yes
          || preceq_instance(monoid.words(), entry.partner).outcome
                 == Precedence::yes) {
        return Isoterm::yes;
      }
      if (satisfies_identity(monoid, sigma_identity(entry.sigma)).holds) {
        return Isoterm::no;
      }
      return Isoterm::unknown;
    }

    inline Identity ident_identity(std::size_t m, bool dual) {
      Variable const x("x");
      Variable const y("y");
      Word const     t1 = letter(Variable("t1"));
      Word const     t2 = letter(Variable("t2"));
      if (!dual) {
        Word const head = power(x, m) + t1;
        Word const tail = t2 + letter(y);
        return {head + letter(x) + letter(y) + tail,
                head + letter(y) + letter(x) + tail};
      }
      Word const head = letter(x) + t1;
      Word const tail = t2 + power(y, m);
      return {head + letter(x) + letter(y) + tail,
              head + letter(y) + letter(x) + tail};
    }
  }  // namespace detail

  //! Re-derives the verdict from isoterm probes on xytxty, xtytxy, xtxyty
  //! and the power m = max{m : U ⪯ x^m y^m}.
  inline Classification classify_word_main_route(Word const& u) {
    Classification result;
    auto&          trace = result.trace;
    auto const     count = u.nonlinear_variables().size();
    if (count > 2) {
      result.verdict = Verdict::out_of_scope;
      result.reason  = Reason::out_of_scope;
      trace.push_back(std::to_string(count) + " non-linear variables");
      return result;
    }
    std::vector<Word> const words{u};
    DilworthMonoid const    monoid(words);
    auto stop = [&](Verdict v, Reason r, bool hereditary) {
      result.verdict    = v;
      result.reason     = r;
      result.hereditary = hereditary;
      return result;
    };

    std::size_t non_isoterms     = 0;
    bool        xtxyty_isoterm   = false;
    for (auto const& entry : detail::main_catalog()) {
      auto const status = detail::catalog_isoterm(monoid, entry);
      if (status == Isoterm::unknown) {
        trace.push_back("isoterm status of " + entry.word.to_string()
                        + " undecided");
        return stop(Verdict::inconclusive, Reason::inconclusive, false);
      }
      bool const iso = status == Isoterm::yes;
      trace.push_back(entry.word.to_string()
                      + (iso ? " is an isoterm" : " is not an isoterm"));
      non_isoterms += !iso;
      if (entry.sigma == Sigma::smu) {
        xtxyty_isoterm = iso;
      }
    }
    if (non_isoterms < 2) {
      return stop(Verdict::nfb, Reason::too_many_isoterms, false);
    }
    if (!xtxyty_isoterm) {
      return stop(Verdict::fb, Reason::not_preceding_xtxyty, true);
    }
    std::size_t const m = max_power_m(words);
    trace.push_back("m = " + std::to_string(m));
    if (m <= 1) {
      return stop(Verdict::nfb, Reason::power_too_small, false);
    }
    bool const absent = lemma_ident_check(u, m);
    bool const oracle
        = satisfies_identity(monoid, detail::ident_identity(m, false)).holds
          || satisfies_identity(monoid, detail::ident_identity(m, true)).holds;
    if (absent != oracle) {
      trace.push_back("LemmaIdentMismatch: pattern scan and oracle disagree");
      return stop(Verdict::inconclusive, Reason::inconclusive, false);
    }
    if (absent) {
      trace.push_back("one of the patterns is absent");
      return stop(Verdict::fb, Reason::ident_pattern_absent, false);
    }
    trace.push_back("both patterns are present");
    return stop(Verdict::nfb, Reason::pattern_pair_present, false);
  }

}  // namespace fbword
