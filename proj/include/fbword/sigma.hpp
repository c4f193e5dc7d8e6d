// fbword - finite basis decisions for Dilworth monoids S(W)
//
// The identities σ1, σμ, σ2 and the syntactic test for when S(W)
// satisfies a subset of them.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "word.hpp"

namespace fbword {

  //! σ1 = xyt1xt2y ≈ yxt1xt2y, σμ = xt1xyt2y ≈ xt1yxt2y,
  //! σ2 = xt1yt2xy ≈ xt1yt2yx.
  enum class Sigma : std::uint8_t { s1 = 1, smu = 2, s2 = 4 };

  inline constexpr Sigma all_sigmas[] = {Sigma::s1, Sigma::smu, Sigma::s2};

  inline std::string_view to_string(Sigma s) {
    switch (s) {
      case Sigma::s1:
        return "s1";
      case Sigma::smu:
        return "smu";
      case Sigma::s2:
        return "s2";
    }
    return "?";
  }

  class SigmaSet {
   public:
    constexpr SigmaSet() = default;
    constexpr SigmaSet(std::initializer_list<Sigma> sigmas) {
      for (auto s : sigmas) {
        insert(s);
      }
    }

    static constexpr SigmaSet from_bits(std::uint8_t bits) {
      SigmaSet result;
      result._bits = bits & 7u;
      return result;
    }

    static constexpr SigmaSet all() {
      return from_bits(7);
    }

    //! The seven non-empty subsets in bit order.
    static std::vector<SigmaSet> nonempty_subsets() {
      std::vector<SigmaSet> result;
      for (std::uint8_t b = 1; b < 8; ++b) {
        result.push_back(from_bits(b));
      }
      return result;
    }

    //! Comma-separated names: "s1", "smu", "s2".
    static SigmaSet parse(std::string_view text) {
      SigmaSet result;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto name = text.substr(start, end - start);
        if (name == "s1") {
          result.insert(Sigma::s1);
        } else if (name == "smu") {
          result.insert(Sigma::smu);
        } else if (name == "s2") {
          result.insert(Sigma::s2);
        } else if (!name.empty()) {
          throw std::invalid_argument("unknown identity name '"
                                      + std::string(name) + "'");
        }
        start = end + 1;
      }
      return result;
    }

    constexpr void insert(Sigma s) {
      _bits |= static_cast<std::uint8_t>(s);
    }

    [[nodiscard]] constexpr bool contains(Sigma s) const {
      return (_bits & static_cast<std::uint8_t>(s)) != 0;
    }

    [[nodiscard]] constexpr bool empty() const {
      return _bits == 0;
    }

    [[nodiscard]] constexpr std::uint8_t bits() const {
      return _bits;
    }

    [[nodiscard]] constexpr bool is_subset_of(SigmaSet other) const {
      return (_bits & ~other._bits) == 0;
    }

    [[nodiscard]] std::vector<Sigma> members() const {
      std::vector<Sigma> result;
      for (auto s : all_sigmas) {
        if (contains(s)) {
          result.push_back(s);
        }
      }
      return result;
    }

    [[nodiscard]] std::string to_string() const {
      std::string result;
      for (auto s : members()) {
        if (!result.empty()) {
          result += ',';
        }
        result += fbword::to_string(s);
      }
      return result;
    }

    friend constexpr bool operator==(SigmaSet, SigmaSet) = default;

   private:
    std::uint8_t _bits = 0;
  };

  inline Identity sigma_identity(Sigma s) {
    switch (s) {
      case Sigma::s1:
        return parse_identity("xyt1xt2y=yxt1xt2y");
      case Sigma::smu:
        return parse_identity("xt1xyt2y=xt1yxt2y");
      case Sigma::s2:
        return parse_identity("xt1yt2xy=xt1yt2yx");
    }
    throw std::invalid_argument("unknown sigma");
  }

  inline std::vector<Identity> sigma_identities(SigmaSet set) {
    std::vector<Identity> result;
    for (auto s : set.members()) {
      result.push_back(sigma_identity(s));
    }
    return result;
  }

  //! (L_Σ, R_Σ): the left and the right sides of the identities in Σ.
  inline std::pair<std::vector<Word>, std::vector<Word>>
  sigma_sides(SigmaSet set) {
    std::pair<std::vector<Word>, std::vector<Word>> result;
    for (auto const& id : sigma_identities(set)) {
      result.first.push_back(id.lhs);
      result.second.push_back(id.rhs);
    }
    return result;
  }

  //! Two consecutive occurrences of distinct non-linear variables.
  struct AdjacentPair {
    OccurrenceRef left;
    OccurrenceRef right;
  };

  inline std::vector<AdjacentPair> adjacent_nonlinear_pairs(Word const& u) {
    std::vector<AdjacentPair> result;
    if (u.size() < 2) {
      return result;
    }
    auto const nonlinear = u.nonlinear_variables();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] != u[i + 1] && nonlinear.contains(u[i])
          && nonlinear.contains(u[i + 1])) {
        result.push_back({occurrence_at(u, i), occurrence_at(u, i + 1)});
      }
    }
    return result;
  }

  //! The clause table classifying an adjacent pair {c, d} as Σ-bad. Each
  //! clause is stated on the unordered pair, so both role assignments of
  //! c and d are tried.
  inline bool pair_is_bad(Word const& u, AdjacentPair const& p, SigmaSet set) {
    if (set.empty()) {
      throw std::invalid_argument("pair_is_bad needs a non-empty set");
    }
    bool const first_c = is_first_occurrence(p.left);
    bool const last_c  = is_last_occurrence(u, p.left);
    bool const first_d = is_first_occurrence(p.right);
    bool const last_d  = is_last_occurrence(u, p.right);

    bool const first_first = first_c && first_d;
    bool const last_last   = last_c && last_d;
    bool const first_last  = (first_c && last_d) || (last_c && first_d);

    using enum Sigma;
    if (set == SigmaSet::all()) {
      return false;
    }
    if (set == SigmaSet{smu, s2}) {
      return first_first;
    }
    if (set == SigmaSet{s1, smu}) {
      return last_last;
    }
    if (set == SigmaSet{s1, s2}) {
      return first_last;
    }
    if (set == SigmaSet{smu}) {
      return first_first || last_last;
    }
    if (set == SigmaSet{s2}) {
      return first_c || first_d;
    }
    // {σ1}
    return last_c || last_d;
  }

  //! Every adjacent pair of occurrences of distinct non-linear variables in
  //! every word of W is Σ-bad.
  inline bool satisfies_sigma_syntactic(std::span<Word const> words,
                                        SigmaSet              set) {
    if (set.empty()) {
      throw std::invalid_argument("the identity set must be non-empty");
    }
    for (auto const& u : words) {
      for (auto const& p : adjacent_nonlinear_pairs(u)) {
        if (!pair_is_bad(u, p, set)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool satisfies_sigma_syntactic(std::vector<Word> const& words,
                                        SigmaSet                 set) {
    return satisfies_sigma_syntactic(std::span<Word const>(words), set);
  }

  //! Membership of u in Max(A*, Σ).
  inline bool in_max(Word const& u, SigmaSet set) {
    return satisfies_sigma_syntactic(std::span<Word const>(&u, 1), set);
  }

}  // namespace fbword
