// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Identities u ≈ v, substitutions, and the stability notions used to
// reason about them.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "word.hpp"

namespace fbword {

  struct Identity {
    Word lhs;
    Word rhs;

    [[nodiscard]] bool is_trivial() const {
      return lhs == rhs;
    }

    [[nodiscard]] VariableSet content() const {
      auto result = lhs.content();
      for (auto const& x : rhs) {
        result.insert(x);
      }
      return result;
    }

    [[nodiscard]] Identity swapped() const {
      return {rhs, lhs};
    }

    [[nodiscard]] Identity reversed() const {
      return {lhs.reversed(), rhs.reversed()};
    }

    //! "lhs ≈ rhs" with both sides in canonical token form.
    [[nodiscard]] std::string to_string() const {
      return lhs.to_string() + " ≈ " + rhs.to_string();
    }

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  //! Parses "lhs=rhs" (also accepts "≈" or "~" as the separator).
  //!
  //! Under the t convention the i-th bare t of the left side and the i-th
  //! bare t of the right side name the same linear variable.
  inline Identity parse_identity(std::string_view text,
                                 bool             t_convention = true) {
    static constexpr std::string_view approx = "≈";
    std::size_t                       sep    = std::string_view::npos;
    std::size_t                       width  = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '=' || text[i] == '~') {
        sep   = i;
        width = 1;
        break;
      }
      if (text.substr(i, approx.size()) == approx) {
        sep   = i;
        width = approx.size();
        break;
      }
    }
    if (sep == std::string_view::npos) {
      throw parse_error("identity needs a separator '='", text.size());
    }
    auto lhs_tokens = detail::tokenize(text.substr(0, sep), 0);
    auto rhs_tokens = detail::tokenize(text.substr(sep + width), sep + width);
    auto sides      = detail::apply_t_convention({lhs_tokens, rhs_tokens},
                                            t_convention);
    return {Word(std::move(sides[0])), Word(std::move(sides[1]))};
  }

  //! A monoid morphism of the free monoid, given by its values on finitely
  //! many variables; unmapped variables are fixed.
  class Substitution {
   public:
    using map_type = std::map<Variable, Word>;

    Substitution() = default;
    explicit Substitution(map_type images) : _images(std::move(images)) {}

    void set(Variable const& x, Word image) {
      _images[x] = std::move(image);
    }

    [[nodiscard]] Word image(Variable const& x) const {
      auto it = _images.find(x);
      return it == _images.end() ? letter(x) : it->second;
    }

    [[nodiscard]] bool is_mapped(Variable const& x) const {
      return _images.contains(x);
    }

    [[nodiscard]] Word apply(Word const& u) const {
      Word result;
      for (auto const& x : u) {
        result += image(x);
      }
      return result;
    }

    [[nodiscard]] map_type const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _images.size();
    }

    friend bool operator==(Substitution const&, Substitution const&)
        = default;
    friend auto operator<=>(Substitution const&, Substitution const&)
        = default;

   private:
    map_type _images;
  };

  ////////////////////////////////////////////////////////////////////////
  // Stability and balance
  ////////////////////////////////////////////////////////////////////////

  //! A set X is stable in u ≈ v when u(X) = v(X).
  inline bool is_stable(Identity const& id, VariableSet const& vars) {
    return restrict(id.lhs, vars) == restrict(id.rhs, vars);
  }

  inline bool is_balanced(Identity const& id) {
    return id.lhs.occurrence_counts() == id.rhs.occurrence_counts();
  }

  using VariablePair = std::pair<Variable, Variable>;

  //! Every pair {x, y} (reported with x < y) that is unstable in `id`.
  inline std::set<VariablePair> unstable_pairs(Identity const& id) {
    std::set<VariablePair> result;
    auto const             vars = id.content();
    for (auto it = vars.begin(); it != vars.end(); ++it) {
      for (auto jt = std::next(it); jt != vars.end(); ++jt) {
        if (!is_stable(id, {*it, *jt})) {
          result.emplace(*it, *jt);
        }
      }
    }
    return result;
  }

  //! For every x, u(x, lin(u)) = v(x, lin(u)).
  inline bool is_block_balanced(Identity const& id) {
    auto const linear = id.lhs.linear_variables();
    for (auto const& x : id.content()) {
      auto keep = linear;
      keep.insert(x);
      if (!is_stable(id, keep)) {
        return false;
      }
    }
    return true;
  }

}  // namespace fbword
