// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Enumeration of every substitution Θ with Θ(u) = w. Images may be empty.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "word.hpp"

namespace fbword {

  namespace detail {

    //! A pattern word with its variables replaced by dense ids, numbered in
    //! order of first appearance.
    class CompiledPattern {
     public:
      explicit CompiledPattern(Word const& u) {
        std::map<Variable, std::uint32_t> index;
        for (auto const& x : u) {
          auto [it, inserted]
              = index.emplace(x, static_cast<std::uint32_t>(_vars.size()));
          if (inserted) {
            _vars.push_back(x);
          }
          _ids.push_back(it->second);
        }
      }

      [[nodiscard]] std::vector<std::uint32_t> const& ids() const noexcept {
        return _ids;
      }
      [[nodiscard]] std::vector<Variable> const& variables() const noexcept {
        return _vars;
      }
      [[nodiscard]] std::size_t variable_count() const noexcept {
        return _vars.size();
      }

      //! Id of `x`, or variable_count() when x does not occur.
      [[nodiscard]] std::size_t id_of(Variable const& x) const {
        for (std::size_t i = 0; i < _vars.size(); ++i) {
          if (_vars[i] == x) {
            return i;
          }
        }
        return _vars.size();
      }

     private:
      std::vector<std::uint32_t> _ids;
      std::vector<Variable>      _vars;
    };

    //! Image of a pattern variable as a window into the target word.
    struct Span {
      static constexpr std::size_t unbound
          = std::numeric_limits<std::size_t>::max();
      std::size_t start = 0;
      std::size_t len   = unbound;
    };

    template <typename F>
    class SpanMatcher {
     public:
      SpanMatcher(CompiledPattern const&    pattern,
                  std::span<Variable const> target,
                  F&                        f)
          : _ids(pattern.ids()),
            _target(target),
            _spans(pattern.variable_count()),
            _f(f) {}

      bool run() {
        return step(0, 0);
      }

     private:
      bool equal_windows(std::size_t a, std::size_t b, std::size_t len) const {
        for (std::size_t k = 0; k < len; ++k) {
          if (_target[a + k] != _target[b + k]) {
            return false;
          }
        }
        return true;
      }

      // Returns false once the visitor asks to stop.
      bool step(std::size_t i, std::size_t offset) {
        std::size_t const n = _target.size();
        if (i == _ids.size()) {
          if (offset != n) {
            return true;
          }
          return _f(std::span<Span const>(_spans));
        }
        auto& span = _spans[_ids[i]];
        if (span.len != Span::unbound) {
          if (offset + span.len > n
              || !equal_windows(span.start, offset, span.len)) {
            return true;
          }
          return step(i + 1, offset + span.len);
        }
        for (std::size_t len = 0; offset + len <= n; ++len) {
          span = {offset, len};
          if (!step(i + 1, offset + len)) {
            span = Span{};
            return false;
          }
        }
        span = Span{};
        return true;
      }

      std::vector<std::uint32_t> const& _ids;
      std::span<Variable const>         _target;
      std::vector<Span>                 _spans;
      F&                                _f;
    };

    //! Calls f(spans) for every assignment of windows making the pattern
    //! spell out the target; f returns false to stop. Returns false iff
    //! stopped early.
    template <typename F>
    bool for_each_span_match(CompiledPattern const&    pattern,
                             std::span<Variable const> target,
                             F&&                       f) {
      SpanMatcher<F> matcher(pattern, target, f);
      return matcher.run();
    }

    inline Substitution to_substitution(CompiledPattern const&    pattern,
                                        std::span<Variable const> target,
                                        std::span<Span const>     spans) {
      Substitution::map_type images;
      for (std::size_t v = 0; v < pattern.variable_count(); ++v) {
        auto const& s = spans[v];
        images.emplace(pattern.variables()[v],
                       Word(std::vector<Variable>(
                           target.begin() + static_cast<std::ptrdiff_t>(s.start),
                           target.begin()
                               + static_cast<std::ptrdiff_t>(s.start + s.len))));
      }
      return Substitution(std::move(images));
    }

    //! Whether applying the span assignment to `other` (a word over the
    //! pattern's variables) reproduces the target exactly.
    inline bool image_equals_target(std::vector<std::uint32_t> const& other_ids,
                                    std::span<Variable const>         target,
                                    std::span<Span const>             spans) {
      std::size_t offset = 0;
      for (auto id : other_ids) {
        auto const& s = spans[id];
        if (offset + s.len > target.size()) {
          return false;
        }
        for (std::size_t k = 0; k < s.len; ++k) {
          if (target[s.start + k] != target[offset + k]) {
            return false;
          }
        }
        offset += s.len;
      }
      return offset == target.size();
    }
  }  // namespace detail

  //! Visits every Θ over content(u) with Θ(u) = w, each exactly once.
  //! The visitor returns false to stop the enumeration.
  template <typename F>
  void for_each_match(Word const& u, Word const& w, F&& f) {
    detail::CompiledPattern pattern(u);
    auto const              target = w.letters();
    detail::for_each_span_match(
        pattern, target, [&](std::span<detail::Span const> spans) {
          return f(detail::to_substitution(pattern, target, spans));
        });
  }

  inline std::vector<Substitution> match_substitutions(Word const& u,
                                                       Word const& w) {
    std::vector<Substitution> result;
    for_each_match(u, w, [&result](Substitution const& theta) {
      result.push_back(theta);
      return true;
    });
    return result;
  }

}  // namespace fbword
