// fbword - finite basis decisions for Dilworth monoids S(W)
//
// The Rees quotient S(W) of the free monoid by the ideal of words that are
// not factors of words in W, and an exact decision procedure for whether
// S(W) satisfies an identity.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "match.hpp"
#include "word.hpp"

namespace fbword {

  //! An element of S(W): a factor of some word of W, or the zero.
  class Element {
   public:
    explicit Element(Word w) : _word(std::move(w)) {}

    static Element zero() {
      return Element();
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return !_word.has_value();
    }

    [[nodiscard]] Word const& word() const {
      if (!_word) {
        throw std::logic_error("the zero element is not a word");
      }
      return *_word;
    }

    [[nodiscard]] std::string to_string() const {
      return _word ? (_word->empty() ? std::string("1") : _word->to_string())
                   : std::string("0");
    }

    friend bool operator==(Element const&, Element const&) = default;

   private:
    Element() = default;
    std::optional<Word> _word;
  };

  class DilworthMonoid {
   public:
    explicit DilworthMonoid(std::span<Word const> words)
        : _words(words.begin(), words.end()),
          _alphabet(alphabet_of(words)),
          _factors(subword_closure(words)),
          _factor_list(_factors.begin(), _factors.end()) {
      if (words.empty()) {
        throw std::invalid_argument("S(W) needs a non-empty set of words");
      }
    }

    explicit DilworthMonoid(std::vector<Word> const& words)
        : DilworthMonoid(std::span<Word const>(words)) {}

    [[nodiscard]] std::vector<Word> const& words() const noexcept {
      return _words;
    }
    [[nodiscard]] VariableSet const& alphabet() const noexcept {
      return _alphabet;
    }
    //! W^c in shortlex order, starting with the empty word.
    [[nodiscard]] std::vector<Word> const& factors() const noexcept {
      return _factor_list;
    }
    //! |W^c| + 1, counting the zero.
    [[nodiscard]] std::size_t size() const noexcept {
      return _factors.size() + 1;
    }

    [[nodiscard]] bool contains(Word const& w) const {
      return _factors.contains(w);
    }

    [[nodiscard]] Element one() const {
      return Element(Word());
    }

    //! The image of a word of the free monoid under the quotient map.
    [[nodiscard]] Element image(Word const& w) const {
      return contains(w) ? Element(w) : Element::zero();
    }

    [[nodiscard]] Element multiply(Element const& a, Element const& b) const {
      if (a.is_zero() || b.is_zero()) {
        return Element::zero();
      }
      return image(a.word() + b.word());
    }

    //! All elements, the factors in shortlex order followed by the zero.
    [[nodiscard]] std::vector<Element> elements() const {
      std::vector<Element> result;
      result.reserve(size());
      for (auto const& w : _factor_list) {
        result.emplace_back(w);
      }
      result.push_back(Element::zero());
      return result;
    }

    //! Value of u when each variable takes the given element.
    [[nodiscard]] Element
    evaluate(Word const& u, std::map<Variable, Element> const& values) const {
      Element result = one();
      for (auto const& x : u) {
        auto it = values.find(x);
        if (it == values.end()) {
          throw std::invalid_argument("no value for variable " + x.name());
        }
        result = multiply(result, it->second);
        if (result.is_zero()) {
          break;
        }
      }
      return result;
    }

   private:
    std::vector<Word> _words;
    VariableSet       _alphabet;
    std::set<Word>    _factors;
    std::vector<Word> _factor_list;
  };

  struct OracleVerdict {
    bool                        holds = true;
    std::optional<Substitution> refutation;
  };

  //! Whether replaying Θ in S(W) separates the two sides of `id`.
  inline bool separates(DilworthMonoid const& monoid,
                        Identity const&       id,
                        Substitution const&   theta) {
    return monoid.image(theta.apply(id.lhs))
           != monoid.image(theta.apply(id.rhs));
  }

  namespace detail {
    // Searches Θ with Θ(from) ∈ W^c and Θ(to) ≠ Θ(from). Requires
    // content(to) ⊆ content(from).
    inline std::optional<Substitution>
    one_sided_refutation(DilworthMonoid const& monoid,
                         Word const&           from,
                         Word const&           to) {
      CompiledPattern            pattern(from);
      std::vector<std::uint32_t> to_ids;
      to_ids.reserve(to.size());
      for (auto const& x : to) {
        to_ids.push_back(static_cast<std::uint32_t>(pattern.id_of(x)));
      }
      std::optional<Substitution> found;
      for (auto const& element : monoid.factors()) {
        auto const target = element.letters();
        for_each_span_match(pattern, target, [&](std::span<Span const> spans) {
          if (!image_equals_target(to_ids, target, spans)) {
            found = to_substitution(pattern, target, spans);
            return false;
          }
          return true;
        });
        if (found) {
          break;
        }
      }
      return found;
    }

    inline Substitution content_refutation(DilworthMonoid const& monoid,
                                           Identity const&       id,
                                           Variable const&       missing) {
      Substitution theta;
      for (auto const& x : id.content()) {
        theta.set(x, Word());
      }
      // A letter outside the alphabet maps to zero; the other side is 1.
      Variable g = monoid.alphabet().empty() ? Variable("a")
                                             : *monoid.alphabet().begin();
      theta.set(missing, letter(g));
      return theta;
    }
  }  // namespace detail

  //! Exact decision of S(W) ⊨ lhs ≈ rhs.
  //!
  //! The identity holds iff both sides have the same content and every Θ
  //! sending one side into W^c sends the other side to the same word. Every
  //! such Θ is found by matching the side against each element of W^c, so
  //! the search is bounded by the longest word in W rather than by
  //! |S(W)|^(number of variables).
  inline OracleVerdict satisfies_identity(DilworthMonoid const& monoid,
                                          Identity const&       id) {
    auto const lc = id.lhs.content();
    auto const rc = id.rhs.content();
    if (lc != rc) {
      for (auto const& x : id.content()) {
        if (lc.contains(x) != rc.contains(x)) {
          return {false, detail::content_refutation(monoid, id, x)};
        }
      }
    }
    if (id.is_trivial()) {
      return {true, std::nullopt};
    }
    if (auto theta = detail::one_sided_refutation(monoid, id.lhs, id.rhs)) {
      return {false, std::move(theta)};
    }
    if (auto theta = detail::one_sided_refutation(monoid, id.rhs, id.lhs)) {
      return {false, std::move(theta)};
    }
    return {true, std::nullopt};
  }

  inline OracleVerdict satisfies_identity(std::span<Word const> words,
                                          Identity const&       id) {
    return satisfies_identity(DilworthMonoid(words), id);
  }

  inline OracleVerdict satisfies_identity(std::vector<Word> const& words,
                                          Identity const&          id) {
    return satisfies_identity(DilworthMonoid(words), id);
  }

  inline std::optional<Substitution>
  find_refutation(DilworthMonoid const& monoid, Identity const& id) {
    return satisfies_identity(monoid, id).refutation;
  }

  inline std::optional<Substitution>
  find_refutation(std::vector<Word> const& words, Identity const& id) {
    return satisfies_identity(words, id).refutation;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded isoterm search
  ////////////////////////////////////////////////////////////////////////

  struct IsotermVerdict {
    enum class Outcome { not_isoterm, no_witness_up_to };

    Outcome             outcome = Outcome::no_witness_up_to;
    std::optional<Word> partner;
    std::size_t         bound = 0;

    [[nodiscard]] bool found_partner() const noexcept {
      return outcome == Outcome::not_isoterm;
    }
  };

  namespace detail {
    class PartnerSearch {
     public:
      PartnerSearch(DilworthMonoid const& monoid, Word const& u)
          : _monoid(monoid), _u(u) {
        auto const content = u.content();
        _alphabet.assign(content.begin(), content.end());
        CompiledPattern pattern(u);
        std::vector<std::size_t> pattern_id;
        for (auto const& x : _alphabet) {
          pattern_id.push_back(pattern.id_of(x));
        }
        for (auto const& element : monoid.factors()) {
          auto const target = element.letters();
          for_each_span_match(pattern, target, [&](std::span<Span const> s) {
            Constraint c{element, {}};
            for (auto id : pattern_id) {
              c.images.push_back(element.subword(s[id].start, s[id].len));
            }
            _constraints.push_back(std::move(c));
            return true;
          });
        }
        for (auto const& x : _alphabet) {
          _u_counts.push_back(u.occurrences(x));
        }
      }

      std::optional<Word> run(std::size_t max_len) {
        std::size_t const k = _alphabet.size();
        _offsets.assign(1, std::vector<std::size_t>(_constraints.size(), 0));
        // Balanced candidates first.
        _balanced_phase = true;
        _remaining      = _u_counts;
        _target_len     = _u.size();
        _used.assign(k, 0);
        _current = Word();
        if (search()) {
          return _found;
        }
        _balanced_phase = false;
        for (std::size_t len = k; len <= max_len; ++len) {
          _target_len = len;
          _used.assign(k, 0);
          _current = Word();
          if (search()) {
            return _found;
          }
        }
        return std::nullopt;
      }

     private:
      struct Constraint {
        Word              target;
        std::vector<Word> images;
      };

      bool advance(std::size_t letter_index) {
        auto const& prev = _offsets.back();
        std::vector<std::size_t> next(prev.size());
        for (std::size_t c = 0; c < _constraints.size(); ++c) {
          auto const& target = _constraints[c].target;
          auto const& image  = _constraints[c].images[letter_index];
          std::size_t off    = prev[c];
          if (off + image.size() > target.size()) {
            return false;
          }
          for (std::size_t j = 0; j < image.size(); ++j) {
            if (target[off + j] != image[j]) {
              return false;
            }
          }
          next[c] = off + image.size();
        }
        _offsets.push_back(std::move(next));
        return true;
      }

      bool accept_leaf() {
        if (_current == _u) {
          return false;
        }
        if (!_balanced_phase) {
          for (auto n : _used) {
            if (n == 0) {
              return false;
            }
          }
          if (_current.size() == _u.size() && _used == _u_counts) {
            return false;
          }
        }
        auto const& offsets = _offsets.back();
        for (std::size_t c = 0; c < _constraints.size(); ++c) {
          if (offsets[c] != _constraints[c].target.size()) {
            return false;
          }
        }
        return satisfies_identity(_monoid, {_u, _current}).holds;
      }

      // Lexicographic DFS; returns true once a partner is found.
      bool search() {
        std::size_t const depth = _current.size();
        if (depth == _target_len) {
          if (accept_leaf()) {
            _found = _current;
            return true;
          }
          return false;
        }
        std::size_t const slots_left = _target_len - depth;
        std::size_t       missing    = 0;
        for (auto n : _used) {
          missing += (n == 0);
        }
        if (!_balanced_phase && missing > slots_left) {
          return false;
        }
        for (std::size_t i = 0; i < _alphabet.size(); ++i) {
          if (_balanced_phase && _remaining[i] == 0) {
            continue;
          }
          if (!advance(i)) {
            continue;
          }
          _current.push_back(_alphabet[i]);
          ++_used[i];
          if (_balanced_phase) {
            --_remaining[i];
          }
          bool done = search();
          if (_balanced_phase) {
            ++_remaining[i];
          }
          --_used[i];
          _current.pop_back();
          _offsets.pop_back();
          if (done) {
            return true;
          }
        }
        return false;
      }

      DilworthMonoid const&                 _monoid;
      Word const&                           _u;
      std::vector<Variable>                 _alphabet;
      std::vector<Constraint>               _constraints;
      std::vector<std::size_t>              _u_counts;
      std::vector<std::size_t>              _remaining;
      std::vector<std::size_t>              _used;
      std::vector<std::vector<std::size_t>> _offsets;
      Word                                  _current;
      std::size_t                           _target_len     = 0;
      bool                                  _balanced_phase = true;
      std::optional<Word>                   _found;
    };
  }  // namespace detail

  //! Searches v ≠ u with content(v) = content(u) and |v| ≤ max_len such
  //! that S(W) ⊨ u ≈ v. Candidates with u's occurrence counts are tried
  //! first, then all others by length and lexicographically.
  //!
  //! Every Θ with Θ(u) ∈ W^c must satisfy Θ(v) = Θ(u), which prunes the
  //! candidate tree letter by letter before the full oracle runs.
  inline IsotermVerdict bounded_isoterm(DilworthMonoid const& monoid,
                                        Word const&           u,
                                        std::size_t           max_len) {
    if (max_len < u.size()) {
      throw std::invalid_argument("max_len must be at least the length of u");
    }
    detail::PartnerSearch search(monoid, u);
    if (auto partner = search.run(max_len)) {
      return {IsotermVerdict::Outcome::not_isoterm, std::move(partner),
              max_len};
    }
    return {IsotermVerdict::Outcome::no_witness_up_to, std::nullopt, max_len};
  }

  inline IsotermVerdict bounded_isoterm(std::vector<Word> const& words,
                                        Word const&              u,
                                        std::size_t              max_len) {
    return bounded_isoterm(DilworthMonoid(words), u, max_len);
  }

}  // namespace fbword
