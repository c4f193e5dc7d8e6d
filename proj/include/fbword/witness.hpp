// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Generators for the identity families U_n ≈ V_n that certify S(W) is not
// finitely based, and a verifier that runs them through the exact oracle.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "monoid.hpp"
#include "precedence.hpp"
#include "sigma.hpp"
#include "word.hpp"

namespace fbword {

  ////////////////////////////////////////////////////////////////////////
  // Notation
  ////////////////////////////////////////////////////////////////////////

  enum class BracketKind {
    //! [Xn] = x1 x2 … xn
    ascending,
    //! [nX] = xn … x2 x1
    descending,
    //! [XYn] = x1 y1 x2 y2 … xn yn
    interleaved
  };

  inline Variable indexed(std::string const& prefix, std::size_t i) {
    return Variable(prefix + std::to_string(i));
  }

  inline Word bracket(BracketKind        kind,
                      std::size_t        n,
                      std::string const& first  = "x",
                      std::string const& second = "y") {
    Word result;
    for (std::size_t i = 1; i <= n; ++i) {
      switch (kind) {
        case BracketKind::ascending:
          result.push_back(indexed(first, i));
          break;
        case BracketKind::descending:
          result.push_back(indexed(first, n + 1 - i));
          break;
        case BracketKind::interleaved:
          result.push_back(indexed(first, i));
          result.push_back(indexed(second, i));
          break;
      }
    }
    return result;
  }

  enum class Side { after, before };

  //! U^t (Side::after) or ^tU (Side::before): a fresh linear variable next
  //! to every occurrence.
  inline Word insert_linear(Word const& u, Side side, FreshNames& fresh) {
    Word result;
    for (auto const& x : u) {
      if (side == Side::before) {
        result.push_back(fresh.next("t"));
      }
      result.push_back(x);
      if (side == Side::after) {
        result.push_back(fresh.next("t"));
      }
    }
    return result;
  }

  inline Word insert_linear(Word const& u, Side side) {
    FreshNames fresh(u.content());
    return insert_linear(u, side, fresh);
  }

  ////////////////////////////////////////////////////////////////////////
  // Row identities
  ////////////////////////////////////////////////////////////////////////

  struct Table1Params {
    //! Row 3: images π(1), …, π(n²) of a permutation of {1, …, n²}.
    std::optional<std::vector<std::size_t>> permutation;
    //! Row 7: the exponent k > 2.
    std::size_t k = 3;
  };

  namespace detail {
    inline Word squares(std::string const& prefix, std::size_t n) {
      Word result;
      for (std::size_t i = 1; i <= n; ++i) {
        result += power(indexed(prefix, i), 2);
      }
      return result;
    }

    inline void check_permutation(std::vector<std::size_t> const& perm,
                                  std::size_t                     size) {
      if (perm.size() != size) {
        throw std::invalid_argument("the permutation must have "
                                    + std::to_string(size) + " entries");
      }
      std::vector<bool> seen(size + 1, false);
      for (auto p : perm) {
        if (p < 1 || p > size || seen[p]) {
          throw std::invalid_argument("not a permutation of {1, ..., "
                                      + std::to_string(size) + "}");
        }
        seen[p] = true;
      }
    }
  }  // namespace detail

  //! The identity U_n ≈ V_n of the given row. Linear variables are t1, t2, …
  inline Identity table1_identity(int                 row,
                                  std::size_t         n,
                                  Table1Params const& params = {}) {
    if (n < 1) {
      throw std::invalid_argument("n must be at least 1");
    }
    Variable const x("x");
    Variable const y("y");
    Variable const z("z");
    Word const     t1 = letter(Variable("t1"));
    Word const     t2 = letter(Variable("t2"));
    using enum BracketKind;
    switch (row) {
      case 1: {
        Word const xy = bracket(interleaved, n);
        Word const yx = bracket(ascending, n, "y") + bracket(ascending, n);
        return {xy + t1 + yx, yx + t1 + xy};
      }
      case 2: {
        Word const up   = bracket(ascending, n);
        Word const down = bracket(descending, n);
        return {letter(y) + up + t1 + letter(y) + down,
                up + letter(y) + t1 + down + letter(y)};
      }
      case 3: {
        if (!params.permutation) {
          throw std::invalid_argument("row 3 needs a permutation");
        }
        std::size_t const size = n * n;
        detail::check_permutation(*params.permutation, size);
        Word const plain = bracket(ascending, size);
        Word       permuted;
        for (auto p : *params.permutation) {
          permuted.push_back(indexed("x", p));
        }
        return {plain + t1 + permuted, permuted + t1 + plain};
      }
      case 4: {
        FreshNames fresh;
        Word const zp = bracket(interleaved, n, "z", "p");
        Word const zq = bracket(interleaved, n, "z", "q");
        Word const pr = bracket(interleaved, n, "p", "r");
        Word const qr = bracket(interleaved, n, "q", "r");
        for (auto const* w : {&zp, &zq, &pr, &qr}) {
          fresh.reserve(*w);
        }
        fresh.reserve(x);
        fresh.reserve(y);
        Word const head = insert_linear(zp, Side::after, fresh);
        Word const tail = insert_linear(qr, Side::before, fresh);
        return {head + letter(x) + zq + letter(x) + letter(y) + pr
                    + letter(y) + tail,
                head + letter(x) + zq + letter(y) + letter(x) + pr
                    + letter(y) + tail};
      }
      case 5: {
        Word const tail = t1 + letter(y) + detail::squares("z", n) + letter(x);
        return {letter(x) + letter(y) + tail, letter(y) + letter(x) + tail};
      }
      case 6: {
        Word const up   = bracket(ascending, n, "a");
        Word const down = bracket(descending, n, "a");
        return {letter(x) + letter(y) + up + letter(y) + letter(x) + t1 + down,
                letter(y) + letter(x) + up + letter(x) + letter(y) + t1 + down};
      }
      case 7: {
        if (params.k < 3) {
          throw std::invalid_argument("row 7 needs k > 2");
        }
        Word const squares = detail::squares("p", n);
        return {letter(y) + t1 + power(x, params.k - 1) + letter(y) + squares
                    + letter(z) + letter(x) + t2 + letter(z),
                letter(y) + t1 + power(x, params.k) + letter(y) + squares
                    + letter(z) + t2 + letter(z)};
      }
      default:
        throw std::invalid_argument("table row must be in 1..7, found "
                                    + std::to_string(row));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Two-letter words with a long block
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::size_t run_ending_at(Word const&     u,
                                     std::size_t     end,
                                     Variable const& x) {
      std::size_t len = 0;
      while (len < end && u[end - 1 - len] == x) {
        ++len;
      }
      return len;
    }

    inline std::size_t run_starting_at(Word const&     u,
                                       std::size_t     start,
                                       Variable const& x) {
      std::size_t len = 0;
      while (start + len < u.size() && u[start + len] == x) {
        ++len;
      }
      return len;
    }

    //! The two non-linear variables of U, or an error.
    inline std::pair<Variable, Variable> two_nonlinear(Word const& u) {
      auto const nonlinear = u.nonlinear_variables();
      if (nonlinear.size() != 2) {
        throw std::invalid_argument(
            "the word must have exactly two non-linear variables");
      }
      return {*nonlinear.begin(), *std::next(nonlinear.begin())};
    }

    inline Word to_xy(Word const&     u,
                      Variable const& a,
                      Variable const& b,
                      FreshNames&     fresh) {
      return rename(tilde_transform(u, a, b, fresh),
                    {{a, Variable("x")}, {b, Variable("y")}});
    }
  }  // namespace detail

  //! U = u1 a^α1 b^β a^α2 v b^γ u2 (case 1) or
  //! U = u1 a^α1 b^β a^α2 w a^α3 v b^γ u2 (case 2), read on U or, when
  //! `reversed`, on the reversal of U.
  struct AbbaDecomposition {
    Variable    a{"a"};
    Variable    b{"b"};
    bool        reversed = false;
    Word        u1;
    std::size_t alpha1 = 0;
    std::size_t beta   = 0;
    std::size_t alpha2 = 0;
    //! Present in case 2 only.
    std::optional<Word> w;
    std::size_t         alpha3 = 0;
    Word                v;
    std::size_t         gamma = 0;
    Word                u2;

    [[nodiscard]] int case_number() const {
      return w ? 2 : 1;
    }

    //! The word the decomposition was read on (U, or U reversed).
    [[nodiscard]] Word oriented() const {
      Word result = u1 + power(a, alpha1) + power(b, beta) + power(a, alpha2);
      if (w) {
        result += *w + power(a, alpha3);
      }
      return result + v + power(b, gamma) + u2;
    }

    [[nodiscard]] Word reassemble() const {
      return reversed ? oriented().reversed() : oriented();
    }
  };

  namespace detail {
    inline std::optional<AbbaDecomposition>
    abba_on(Word const& u, Variable const& a, Variable const& b) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] != a || u[i + 1] != b) {
          continue;
        }
        std::size_t const beta = run_starting_at(u, i + 1, b);
        std::size_t const j    = i + 1 + beta;
        if (beta < 2 || j >= u.size() || u[j] != a) {
          continue;
        }
        std::size_t const alpha2 = run_starting_at(u, j, a);
        std::size_t const s      = j + alpha2;
        std::size_t       next_b = s;
        while (next_b < u.size() && u[next_b] != b) {
          ++next_b;
        }
        if (next_b == u.size()) {
          continue;
        }
        AbbaDecomposition d;
        d.a      = a;
        d.b      = b;
        d.alpha1 = run_ending_at(u, i + 1, a);
        d.u1     = u.prefix(i + 1 - d.alpha1);
        d.beta   = beta;
        d.alpha2 = alpha2;
        Word const segment = u.subword(s, next_b - s);
        if (!segment.contains(a)) {
          d.v = segment;
        } else {
          std::size_t last_a = segment.size();
          while (segment[last_a - 1] != a) {
            --last_a;
          }
          d.alpha3        = run_ending_at(segment, last_a, a);
          d.w             = segment.prefix(last_a - d.alpha3);
          d.v             = segment.suffix_from(last_a);
        }
        d.gamma = run_starting_at(u, next_b, b);
        d.u2    = u.suffix_from(next_b + d.gamma);
        return d;
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Finds the factor a b^β a (β > 1) followed by a later b, trying both
  //! letter roles and then the reversed word.
  inline AbbaDecomposition extract_abba_decomposition(Word const& u) {
    auto const [p, q] = detail::two_nonlinear(u);
    for (bool reversed : {false, true}) {
      Word const oriented = reversed ? u.reversed() : u;
      for (auto const& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
        if (auto d = detail::abba_on(oriented, a, b)) {
          d->reversed = reversed;
          return *d;
        }
      }
    }
    throw std::invalid_argument("no factor a b^k a (k > 1) with a later b in "
                                + u.to_string());
  }

  inline Identity abba_identity(AbbaDecomposition const& d, std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("n must be at least 1");
    }
    Variable const x("x");
    Variable const y("y");
    FreshNames     fresh;
    fresh.reserve(x);
    fresh.reserve(y);
    fresh.reserve(d.a);
    fresh.reserve(d.b);
    Word const t1 = letter(fresh.next("t"));
    Word const t2 = letter(fresh.next("t"));
    Word       up;
    for (std::size_t i = 0; i < n; ++i) {
      up.push_back(fresh.next("a"));
    }
    Word const down = up.reversed();
    Word const u1   = detail::to_xy(d.u1, d.a, d.b, fresh);
    Word const w    = d.w ? detail::to_xy(*d.w, d.a, d.b, fresh) : Word();
    Word const u2   = detail::to_xy(d.u2, d.a, d.b, fresh);

    Word const head = u1 + power(x, d.alpha1) + up;
    Word       middle_lhs
        = power(y, d.beta - 1) + power(x, d.alpha2);
    Word middle_rhs = power(x, d.alpha2) + power(y, d.beta - 1);
    if (d.w) {
      middle_lhs += w + power(x, d.alpha3);
      middle_rhs += w + power(x, d.alpha3);
    }
    Word const tail = t1 + down + t2 + power(y, d.gamma) + u2;
    Identity   result{head + middle_lhs + tail, head + middle_rhs + tail};
    return d.reversed ? result.reversed() : result;
  }

  //! U = u1 a^p b a b a^q u2 with p, q maximal.
  struct AbabaDecomposition {
    Variable    a{"a"};
    Variable    b{"b"};
    Word        u1;
    std::size_t p = 0;
    std::size_t q = 0;
    Word        u2;

    [[nodiscard]] Word reassemble() const {
      return u1 + power(a, p) + letter(b) + letter(a) + letter(b) + power(a, q)
             + u2;
    }
  };

  //! Uses the leftmost factor ababa over both letter roles.
  inline AbabaDecomposition extract_ababa_decomposition(Word const& u) {
    auto const [p, q] = detail::two_nonlinear(u);
    std::optional<AbabaDecomposition> best;
    std::size_t                       best_pos = 0;
    for (auto const& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      Word const pattern
          = letter(a) + letter(b) + letter(a) + letter(b) + letter(a);
      auto const pos = find_factor(pattern, u);
      if (!pos || (best && *pos >= best_pos)) {
        continue;
      }
      AbabaDecomposition d;
      d.a          = a;
      d.b          = b;
      d.p          = detail::run_ending_at(u, *pos + 1, a);
      d.u1         = u.prefix(*pos + 1 - d.p);
      d.q          = detail::run_starting_at(u, *pos + 4, a);
      d.u2         = u.suffix_from(*pos + 4 + d.q);
      best         = d;
      best_pos     = *pos;
    }
    if (!best) {
      throw std::invalid_argument("no factor ababa in " + u.to_string());
    }
    return *best;
  }

  inline Identity ababa_identity(AbabaDecomposition const& d, std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("n must be at least 1");
    }
    Variable const x("x");
    Variable const y("y");
    FreshNames     fresh;
    fresh.reserve(x);
    fresh.reserve(y);
    fresh.reserve(d.a);
    fresh.reserve(d.b);
    Word const t1 = letter(fresh.next("t"));
    Word const t2 = letter(fresh.next("t"));
    Word       up;
    for (std::size_t i = 0; i < n; ++i) {
      up.push_back(fresh.next("a"));
    }
    Word const u1   = detail::to_xy(d.u1, d.a, d.b, fresh);
    Word const u2   = detail::to_xy(d.u2, d.a, d.b, fresh);
    Word const head = u1 + power(x, d.p) + up + letter(x) + t1 + up.reversed()
                      + t2;
    return {head + letter(y) + power(x, d.q) + u2,
            head + power(x, d.q) + letter(y) + u2};
  }

  inline Identity ababa_identity(Word const& u, std::size_t n) {
    return ababa_identity(extract_ababa_decomposition(u), n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Template word
  ////////////////////////////////////////////////////////////////////////

  //! w = w1 a^α1 b^β1 w2 a^α2 p b^β2 w3.
  struct JacksonParts {
    Variable    a{"a"};
    Variable    b{"b"};
    Word        w1;
    std::size_t alpha1 = 1;
    std::size_t beta1  = 1;
    Word        w2;
    std::size_t alpha2 = 1;
    Word        p;
    std::size_t beta2 = 1;
    Word        w3;

    [[nodiscard]] Word reassemble() const {
      return w1 + power(a, alpha1) + power(b, beta1) + w2 + power(a, alpha2) + p
             + power(b, beta2) + w3;
    }
  };

  //! w̃1 a^α1 [Xn] b^(β1−1) w̃2 a^α2 t [nX] t b^β2 w̃3.
  inline Word jackson_word(JacksonParts const& parts, std::size_t n) {
    if (parts.alpha1 == 0 || parts.beta1 == 0 || parts.alpha2 == 0
        || parts.beta2 == 0) {
      throw std::invalid_argument("exponents must be positive");
    }
    FreshNames fresh;
    fresh.reserve(parts.a);
    fresh.reserve(parts.b);
    Word const t1 = letter(fresh.next("t"));
    Word const t2 = letter(fresh.next("t"));
    Word       up;
    for (std::size_t i = 0; i < n; ++i) {
      up.push_back(fresh.next("x"));
    }
    auto const& a = parts.a;
    auto const& b = parts.b;
    Word const  w1 = tilde_transform(parts.w1, a, b, fresh);
    Word const  w2 = tilde_transform(parts.w2, a, b, fresh);
    Word const  w3 = tilde_transform(parts.w3, a, b, fresh);
    return w1 + power(a, parts.alpha1) + up + power(b, parts.beta1 - 1) + w2
           + power(a, parts.alpha2) + t1 + up.reversed() + t2
           + power(b, parts.beta2) + w3;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  enum class WitnessFamily {
    row1 = 1,
    row2,
    row3,
    row4,
    row5,
    row6,
    row7,
    abba_case1,
    abba_case2,
    ababa,
    jackson
  };

  inline std::string_view to_string(WitnessFamily f) {
    switch (f) {
      case WitnessFamily::row1:
        return "row1";
      case WitnessFamily::row2:
        return "row2";
      case WitnessFamily::row3:
        return "row3";
      case WitnessFamily::row4:
        return "row4";
      case WitnessFamily::row5:
        return "row5";
      case WitnessFamily::row6:
        return "row6";
      case WitnessFamily::row7:
        return "row7";
      case WitnessFamily::abba_case1:
        return "abba-case1";
      case WitnessFamily::abba_case2:
        return "abba-case2";
      case WitnessFamily::ababa:
        return "ababa";
      case WitnessFamily::jackson:
        return "jackson";
    }
    return "?";
  }

  inline bool is_table_row(WitnessFamily f) {
    return static_cast<int>(f) <= 7;
  }

  struct FamilySpec {
    WitnessFamily family = WitnessFamily::row1;
    Table1Params  params;
    //! The word U for the abba and ababa families; defaults to the first
    //! word of W.
    std::optional<Word> source;
    //! Required for the template family.
    std::optional<JacksonParts> jackson;
  };

  enum class HypothesisStatus { holds, fails, undecided };

  inline std::string_view to_string(HypothesisStatus s) {
    switch (s) {
      case HypothesisStatus::holds:
        return "holds";
      case HypothesisStatus::fails:
        return "fails";
      case HypothesisStatus::undecided:
        return "undecided";
    }
    return "?";
  }

  struct HypothesisCheck {
    std::string      description;
    HypothesisStatus status = HypothesisStatus::undecided;
  };

  struct FamilyCheck {
    std::size_t   n = 0;
    Identity      identity;
    OracleVerdict verdict;
    bool          balanced = false;
    //! n > 3, the bound quoted in the table header.
    bool meets_table_threshold = false;
    //! n > 1 for the table rows (n > 3 for row 3), n > 0 for the two-letter
    //! families.
    bool meets_lemma_threshold = false;
  };

  struct FamilyReport {
    WitnessFamily                family = WitnessFamily::row1;
    std::vector<FamilyCheck>     checks;
    std::vector<HypothesisCheck> hypotheses;

    [[nodiscard]] bool all_hold() const {
      return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
        return c.verdict.holds;
      });
    }

    [[nodiscard]] bool hypotheses_hold() const {
      return std::all_of(
          hypotheses.begin(), hypotheses.end(),
          [](auto const& h) { return h.status == HypothesisStatus::holds; });
    }
  };

  namespace detail {
    inline HypothesisStatus from_precedence(Precedence p, bool want) {
      if (p == Precedence::unknown) {
        return HypothesisStatus::undecided;
      }
      return ((p == Precedence::yes) == want) ? HypothesisStatus::holds
                                              : HypothesisStatus::fails;
    }

    //! W ⪯ u decided only in the yes direction.
    inline HypothesisStatus instance(std::vector<Word> const& words,
                                     std::string_view         u,
                                     bool                     want) {
      auto p = preceq_instance(words, parse_word(u)).outcome;
      return from_precedence(p, want);
    }

    inline std::vector<HypothesisCheck>
    family_hypotheses(std::vector<Word> const& words, FamilySpec const& spec) {
      std::vector<HypothesisCheck> h;
      auto add = [&h](std::string text, HypothesisStatus s) {
        h.push_back({std::move(text), s});
      };
      auto xytxy = [&](bool want) {
        return from_precedence(preceq_xytxy(words).outcome, want);
      };
      auto xytyx = [&](bool want) {
        return from_precedence(preceq_xytyx(words).outcome, want);
      };
      auto side = [&](Sigma s, bool want) {
        return from_precedence(preceq_sigma_side(words, s).outcome, want);
      };
      auto xxyy = [&](bool want) {
        return from_precedence(
            max_power_m(words) >= 2 ? Precedence::yes : Precedence::no, want);
      };
      if (is_table_row(spec.family)) {
        bool simple = std::all_of(words.begin(), words.end(), [](auto& w) {
          return is_block_n_simple(w, 2);
        });
        add("W is block-2-simple",
            simple ? HypothesisStatus::holds : HypothesisStatus::fails);
      }
      switch (spec.family) {
        case WitnessFamily::row1:
          add("W ⪯ xytxy", xytxy(true));
          add("W not ⪯ xytyx", xytyx(false));
          break;
        case WitnessFamily::row2:
          add("W ⪯ xytyx", xytyx(true));
          add("W not ⪯ xytxy", xytxy(false));
          break;
        case WitnessFamily::row3:
          add("W ⪯ xytxty", side(Sigma::s1, true));
          add("W ⪯ xtytxy", side(Sigma::s2, true));
          add("W not ⪯ xytxy", xytxy(false));
          add("W not ⪯ xytyx", xytyx(false));
          break;
        case WitnessFamily::row4:
          add("W ⪯ xtxyty", side(Sigma::smu, true));
          add("W not ⪯ xxyy", xxyy(false));
          add("W not ⪯ xytxy", xytxy(false));
          break;
        case WitnessFamily::row5:
          add("W ⪯ xxyy", xxyy(true));
          add("W ⪯ xytxty", side(Sigma::s1, true));
          add("W not ⪯ xytxy", xytxy(false));
          add("W not ⪯ xytyx", xytyx(false));
          break;
        case WitnessFamily::row6:
          add("W ⪯ xtxyty", side(Sigma::smu, true));
          add("W ⪯ xytxy", xytxy(true));
          add("W ⪯ xytyx", xytyx(true));
          add("W not ⪯ xyxyx", instance(words, "xyxyx", false));
          add("W not ⪯ yx^my for m > 1", HypothesisStatus::undecided);
          break;
        case WitnessFamily::row7: {
          std::size_t const k = spec.params.k;
          add("W ⪯ xxyy", xxyy(true));
          for (std::size_t d = 1; d < k; ++d) {
            auto const ds  = std::to_string(d);
            auto const kds = std::to_string(k - d);
            Word const left = parse_word("yty") + power(Variable("x"), d)
                              + parse_word("t") + power(Variable("x"), k - d);
            Word const right = power(Variable("x"), k - d) + parse_word("t")
                               + power(Variable("x"), d) + parse_word("yty");
            add("W ⪯ ytyx^" + ds + "tx^" + kds,
                from_precedence(preceq_instance(words, left).outcome, true));
            add("W ⪯ x^" + kds + "tx^" + ds + "yty",
                from_precedence(preceq_instance(words, right).outcome, true));
          }
          Word const n1 = power(Variable("x"), k) + parse_word("yty");
          add("W not ⪯ x^" + std::to_string(k) + "yty",
              from_precedence(preceq_instance(words, n1).outcome, false));
          add("W not ⪯ xytxty", side(Sigma::s1, false));
          add("W not ⪯ xtytxy", side(Sigma::s2, false));
          break;
        }
        case WitnessFamily::abba_case1:
        case WitnessFamily::abba_case2:
        case WitnessFamily::ababa: {
          Word const u = spec.source ? *spec.source : words.front();
          add("U has exactly two non-linear variables",
              u.nonlinear_variables().size() == 2 ? HypothesisStatus::holds
                                                  : HypothesisStatus::fails);
          break;
        }
        case WitnessFamily::jackson:
          add("xytyx is an isoterm", xytyx(true));
          break;
      }
      return h;
    }

    inline Identity family_identity(std::vector<Word> const& words,
                                    FamilySpec const&        spec,
                                    std::size_t              n) {
      switch (spec.family) {
        case WitnessFamily::abba_case1:
        case WitnessFamily::abba_case2: {
          auto d = extract_abba_decomposition(spec.source ? *spec.source
                                                          : words.front());
          int const expected
              = spec.family == WitnessFamily::abba_case1 ? 1 : 2;
          if (d.case_number() != expected) {
            throw std::invalid_argument("the decomposition is case "
                                        + std::to_string(d.case_number()));
          }
          return abba_identity(d, n);
        }
        case WitnessFamily::ababa:
          return ababa_identity(spec.source ? *spec.source : words.front(), n);
        case WitnessFamily::jackson:
          throw std::invalid_argument("the template family has no identity");
        default:
          return table1_identity(static_cast<int>(spec.family), n,
                                 spec.params);
      }
    }
  }  // namespace detail

  //! Generates U_n ≈ V_n for each n and decides S(W) ⊨ U_n ≈ V_n exactly;
  //! also reports the hypotheses of the family that are decidable from W.
  inline FamilyReport verify_family(std::vector<Word> const&        words,
                                    FamilySpec const&               spec,
                                    std::vector<std::size_t> const& ns) {
    DilworthMonoid const monoid(words);
    FamilyReport         report;
    report.family     = spec.family;
    report.hypotheses = detail::family_hypotheses(words, spec);
    if (spec.family == WitnessFamily::jackson && !spec.jackson) {
      throw std::invalid_argument("the template family needs its parts");
    }
    for (auto n : ns) {
      FamilyCheck check;
      check.n = n;
      if (spec.family == WitnessFamily::jackson) {
        // The template word must fail to be an isoterm: look for a balanced
        // partner and report it as the identity.
        Word const word    = jackson_word(*spec.jackson, n);
        auto const verdict = bounded_isoterm(monoid, word, word.size());
        check.identity     = {word, verdict.partner.value_or(word)};
        check.verdict      = verdict.found_partner()
                                 ? satisfies_identity(monoid, check.identity)
                                 : OracleVerdict{false, std::nullopt};
      } else {
        check.identity = detail::family_identity(words, spec, n);
        check.verdict  = satisfies_identity(monoid, check.identity);
      }
      check.balanced = is_balanced(check.identity);
      check.meets_table_threshold = n > 3;
      if (is_table_row(spec.family)) {
        check.meets_lemma_threshold
            = spec.family == WitnessFamily::row3 ? n > 3 : n > 1;
      } else {
        check.meets_lemma_threshold = n > 0;
      }
      report.checks.push_back(std::move(check));
    }
    return report;
  }

}  // namespace fbword
