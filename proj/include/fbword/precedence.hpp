// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Decidable fragments of the quasi-order W ⪯ W' (each word of W' is an
// isoterm for S(W)).

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "match.hpp"
#include "sigma.hpp"
#include "word.hpp"

namespace fbword {

  enum class Precedence { yes, no, unknown };

  inline std::string_view to_string(Precedence p) {
    switch (p) {
      case Precedence::yes:
        return "yes";
      case Precedence::no:
        return "no";
      case Precedence::unknown:
        return "unknown";
    }
    return "?";
  }

  struct PrecedenceVerdict {
    Precedence outcome = Precedence::unknown;
    //! Maps the target word onto `factor`.
    std::optional<Substitution> witness;
    //! The element of W^c exhibiting the pattern.
    std::optional<Word> factor;
  };

  namespace catalog {
    inline Word xytxy() {
      return parse_word("xytxy");
    }
    inline Word xytyx() {
      return parse_word("xytyx");
    }
    inline Word xtxyty() {
      return parse_word("xtxyty");
    }
    inline Word xtyxty() {
      return parse_word("xtyxty");
    }
    inline Word xytxty() {
      return parse_word("xytxty");
    }
    inline Word yxtxty() {
      return parse_word("yxtxty");
    }
    inline Word xtytxy() {
      return parse_word("xtytxy");
    }
    inline Word xtytyx() {
      return parse_word("xtytyx");
    }
    inline Word xxyy() {
      return parse_word("xxyy");
    }
    //! x^m y^m.
    inline Word power_pair(std::size_t m) {
      return power(Variable("x"), m) + power(Variable("y"), m);
    }
  }  // namespace catalog

  namespace detail {
    // Finds a factor first·second · P · third·fourth with first ≠ second in
    // some word of W, where (third, fourth) is (first, second) or its swap.
    inline PrecedenceVerdict find_two_letter_frame(std::span<Word const> words,
                                                   Word const& target,
                                                   bool        swap_tail) {
      for (auto const& w : words) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          auto const& a = w[i];
          auto const& b = w[i + 1];
          if (a == b) {
            continue;
          }
          auto const& c = swap_tail ? b : a;
          auto const& d = swap_tail ? a : b;
          for (std::size_t j = i + 2; j + 1 < w.size(); ++j) {
            if (w[j] == c && w[j + 1] == d) {
              Word factor = w.subword(i, j + 2 - i);
              Word middle = w.subword(i + 2, j - i - 2);
              Substitution theta;
              theta.set(Variable("x"), letter(a));
              theta.set(Variable("y"), letter(b));
              for (auto const& t : target.linear_variables()) {
                theta.set(t, middle);
              }
              return {Precedence::yes, std::move(theta), std::move(factor)};
            }
          }
        }
      }
      return {Precedence::no, std::nullopt, std::nullopt};
    }
  }  // namespace detail

  //! Exact: W ⪯ xytxy iff W^c contains a word abPab with a ≠ b.
  inline PrecedenceVerdict preceq_xytxy(std::span<Word const> words) {
    return detail::find_two_letter_frame(words, catalog::xytxy(), false);
  }

  inline PrecedenceVerdict preceq_xytxy(std::vector<Word> const& words) {
    return preceq_xytxy(std::span<Word const>(words));
  }

  //! Exact for block-2-simple W: W ⪯ xytyx iff W^c contains abPba with
  //! a ≠ b. Unknown when some word is not block-2-simple.
  inline PrecedenceVerdict preceq_xytyx(std::span<Word const> words) {
    for (auto const& w : words) {
      if (!is_block_n_simple(w, 2)) {
        return {Precedence::unknown, std::nullopt, std::nullopt};
      }
    }
    return detail::find_two_letter_frame(words, catalog::xytyx(), true);
  }

  inline PrecedenceVerdict preceq_xytyx(std::vector<Word> const& words) {
    return preceq_xytyx(std::span<Word const>(words));
  }

  //! Exact: W ⪯ lhs(σ) iff S(W) does not satisfy σ, decided by the Σ-bad
  //! criterion. The left sides are xytxty (σ1), xtxyty (σμ), xtytxy (σ2).
  inline PrecedenceVerdict preceq_sigma_side(std::span<Word const> words,
                                             Sigma                 s) {
    bool const holds = satisfies_sigma_syntactic(words, SigmaSet{s});
    return {holds ? Precedence::no : Precedence::yes, std::nullopt,
            std::nullopt};
  }

  inline PrecedenceVerdict preceq_sigma_side(std::vector<Word> const& words,
                                             Sigma                    s) {
    return preceq_sigma_side(std::span<Word const>(words), s);
  }

  struct PowerWitness {
    std::size_t m = 0;
    Word        base_x;
    Word        base_y;
    Word        factor;
  };

  //! The largest m ≥ 1 for which some element of W^c is P^m Q^m with P, Q
  //! non-commuting, together with one such P, Q. m = 0 when there is none.
  inline PowerWitness max_power_witness(std::span<Word const> words) {
    PowerWitness best;
    for (auto const& w : words) {
      std::size_t const n = w.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t lp = 1; i + lp < n; ++lp) {
          Word const p = w.subword(i, lp);
          for (std::size_t m = 1; i + m * (lp + 1) <= n; ++m) {
            if (w.subword(i + (m - 1) * lp, lp) != p) {
              break;
            }
            std::size_t const q_start = i + m * lp;
            for (std::size_t lq = 1; q_start + m * lq <= n; ++lq) {
              Word const q = w.subword(q_start, lq);
              if (m <= best.m || commutes(p, q)) {
                continue;
              }
              if (w.subword(q_start, m * lq) == q.power(m)) {
                best = {m, p, q, w.subword(i, m * (lp + lq))};
              }
            }
          }
        }
      }
    }
    return best;
  }

  inline std::size_t max_power_m(std::span<Word const> words) {
    return max_power_witness(words).m;
  }

  inline std::size_t max_power_m(std::vector<Word> const& words) {
    return max_power_m(std::span<Word const>(words));
  }

  //! Sufficient check for W ⪯ u, where u has exactly two non-linear
  //! variables: some Θ with non-commuting images of those two variables
  //! maps u into W^c. Never answers no.
  inline PrecedenceVerdict preceq_instance(std::span<Word const> words,
                                           Word const&           u) {
    auto const nonlinear = u.nonlinear_variables();
    if (nonlinear.size() != 2) {
      throw std::invalid_argument(
          "preceq_instance needs exactly two non-linear variables, found "
          + std::to_string(nonlinear.size()));
    }
    auto const& x = *nonlinear.begin();
    auto const& y = *std::next(nonlinear.begin());

    PrecedenceVerdict result{Precedence::unknown, std::nullopt, std::nullopt};
    for (auto const& element : subword_closure(words)) {
      if (element.size() < 4) {
        continue;
      }
      for_each_match(u, element, [&](Substitution const& theta) {
        if (!commutes(theta.image(x), theta.image(y))) {
          result = {Precedence::yes, theta, element};
          return false;
        }
        return true;
      });
      if (result.outcome == Precedence::yes) {
        break;
      }
    }
    return result;
  }

  inline PrecedenceVerdict preceq_instance(std::vector<Word> const& words,
                                           Word const&              u) {
    return preceq_instance(std::span<Word const>(words), u);
  }

}  // namespace fbword
