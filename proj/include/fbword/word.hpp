// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Words over a countable alphabet of variables, and the combinatorial
// primitives the rest of the library is built on.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbword {

  //! Raised when word or identity text does not follow the token grammar
  //! `[a-z][0-9]*`.
  class parse_error : public std::invalid_argument {
   public:
    parse_error(std::string const& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  class Variable {
   public:
    Variable() = default;

    explicit Variable(std::string name) : _name(std::move(name)) {
      if (_name.empty()) {
        throw std::invalid_argument("variable name must be non-empty");
      }
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    friend bool operator==(Variable const&, Variable const&) = default;
    friend auto operator<=>(Variable const&, Variable const&) = default;

   private:
    std::string _name;
  };

  using VariableSet = std::set<Variable>;

  //! A finite sequence of variable occurrences. The empty word is valid.
  //!
  //! Words compare in shortlex order (length first, then lexicographically
  //! by variable name).
  class Word {
   public:
    using value_type     = Variable;
    using const_iterator = std::vector<Variable>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Variable> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Variable> letters) : _letters(letters) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Variable const& operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::span<Variable const> letters() const noexcept {
      return _letters;
    }

    void push_back(Variable x) {
      _letters.push_back(std::move(x));
    }

    void pop_back() {
      _letters.pop_back();
    }

    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    [[nodiscard]] std::size_t occurrences(Variable const& x) const {
      return static_cast<std::size_t>(
          std::count(_letters.begin(), _letters.end(), x));
    }

    [[nodiscard]] bool contains(Variable const& x) const {
      return std::find(_letters.begin(), _letters.end(), x) != _letters.end();
    }

    [[nodiscard]] VariableSet content() const {
      return VariableSet(_letters.begin(), _letters.end());
    }

    [[nodiscard]] std::map<Variable, std::size_t> occurrence_counts() const {
      std::map<Variable, std::size_t> counts;
      for (auto const& x : _letters) {
        ++counts[x];
      }
      return counts;
    }

    [[nodiscard]] bool is_linear(Variable const& x) const {
      return occurrences(x) == 1;
    }

    [[nodiscard]] VariableSet linear_variables() const {
      VariableSet result;
      for (auto const& [x, n] : occurrence_counts()) {
        if (n == 1) {
          result.insert(x);
        }
      }
      return result;
    }

    [[nodiscard]] VariableSet nonlinear_variables() const {
      VariableSet result;
      for (auto const& [x, n] : occurrence_counts()) {
        if (n >= 2) {
          result.insert(x);
        }
      }
      return result;
    }

    //! The factor of length `len` starting at `pos`.
    [[nodiscard]] Word subword(std::size_t pos, std::size_t len) const {
      if (pos > size() || len > size() - pos) {
        throw std::out_of_range("subword out of range");
      }
      return Word(std::vector<Variable>(_letters.begin() + pos,
                                        _letters.begin() + pos + len));
    }

    [[nodiscard]] Word prefix(std::size_t len) const {
      return subword(0, len);
    }

    [[nodiscard]] Word suffix_from(std::size_t pos) const {
      return subword(pos, size() - pos);
    }

    [[nodiscard]] Word reversed() const {
      return Word(std::vector<Variable>(_letters.rbegin(), _letters.rend()));
    }

    [[nodiscard]] Word power(std::size_t k) const {
      Word result;
      for (std::size_t i = 0; i < k; ++i) {
        result += *this;
      }
      return result;
    }

    //! Canonical serialization: the space-free concatenation of tokens.
    [[nodiscard]] std::string to_string() const {
      std::string result;
      for (auto const& x : _letters) {
        result += x.name();
      }
      return result;
    }

    [[nodiscard]] std::vector<std::string> tokens() const {
      std::vector<std::string> result;
      result.reserve(size());
      for (auto const& x : _letters) {
        result.push_back(x.name());
      }
      return result;
    }

    friend bool operator==(Word const&, Word const&) = default;

    friend std::strong_ordering operator<=>(Word const& lhs, Word const& rhs) {
      if (auto c = lhs.size() <=> rhs.size(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          lhs._letters.begin(), lhs._letters.end(), rhs._letters.begin(),
          rhs._letters.end());
    }

   private:
    std::vector<Variable> _letters;
  };

  inline Word power(Variable const& x, std::size_t k) {
    return Word(std::vector<Variable>(k, x));
  }

  inline Word letter(Variable const& x) {
    return Word{x};
  }

  //! Deterministic generator of variables that avoid a reserved set.
  //!
  //! `next(prefix)` yields prefix1, prefix2, ... skipping any name that is
  //! reserved or already handed out.
  class FreshNames {
   public:
    FreshNames() = default;
    explicit FreshNames(VariableSet reserved) : _used(std::move(reserved)) {}

    void reserve(Variable const& x) {
      _used.insert(x);
    }

    void reserve(Word const& u) {
      _used.insert(u.begin(), u.end());
    }

    [[nodiscard]] bool is_used(Variable const& x) const {
      return _used.contains(x);
    }

    Variable next(std::string const& prefix = "t") {
      auto& counter = _counters[prefix];
      while (true) {
        Variable candidate(prefix + std::to_string(++counter));
        if (_used.insert(candidate).second) {
          return candidate;
        }
      }
    }

   private:
    VariableSet                   _used;
    std::map<std::string, size_t> _counters;
  };

  namespace detail {
    struct Token {
      std::string text;
      std::size_t offset;
    };

    inline bool is_lower(char c) {
      return c >= 'a' && c <= 'z';
    }
    inline bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }
    inline bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    // Greedy digit absorption: "t12a" is the two tokens t12 and a.
    inline std::vector<Token> tokenize(std::string_view text,
                                       std::size_t      base_offset = 0) {
      std::vector<Token> result;
      std::size_t        i = 0;
      while (i < text.size()) {
        char c = text[i];
        if (is_space(c)) {
          ++i;
          continue;
        }
        if (!is_lower(c)) {
          if (is_digit(c)) {
            throw parse_error("token may not start with a digit",
                              base_offset + i);
          }
          throw parse_error(std::string("unexpected character '") + c + "'",
                            base_offset + i);
        }
        std::size_t start = i++;
        while (i < text.size() && is_digit(text[i])) {
          ++i;
        }
        result.push_back({std::string(text.substr(start, i - start)),
                          base_offset + start});
      }
      return result;
    }

    // Replaces each bare "t" by a fresh linear variable; the i-th bare t of
    // every token list maps to the same fresh name.
    inline std::vector<std::vector<Variable>>
    apply_t_convention(std::vector<std::vector<Token>> const& sides,
                       bool                                   t_convention) {
      FreshNames fresh;
      for (auto const& side : sides) {
        for (auto const& tok : side) {
          fresh.reserve(Variable(tok.text));
        }
      }
      std::vector<Variable>              t_names;
      std::vector<std::vector<Variable>> result;
      for (auto const& side : sides) {
        std::vector<Variable> letters;
        std::size_t           t_seen = 0;
        for (auto const& tok : side) {
          if (t_convention && tok.text == "t") {
            if (t_seen == t_names.size()) {
              t_names.push_back(fresh.next("t"));
            }
            letters.push_back(t_names[t_seen++]);
          } else {
            letters.emplace_back(tok.text);
          }
        }
        result.push_back(std::move(letters));
      }
      return result;
    }
  }  // namespace detail

  //! Parses a word from tokens `[a-z][0-9]*`; whitespace is ignored.
  //!
  //! With `t_convention` on, every occurrence of the bare token "t" stands
  //! for a distinct linear variable; these are named t1, t2, ... skipping
  //! names already present in the text.
  inline Word parse_word(std::string_view text, bool t_convention = true) {
    auto sides = detail::apply_t_convention({detail::tokenize(text)},
                                            t_convention);
    return Word(std::move(sides[0]));
  }

  namespace literals {
    inline Word operator""_w(char const* text, std::size_t len) {
      return parse_word(std::string_view(text, len));
    }
  }  // namespace literals

  ////////////////////////////////////////////////////////////////////////
  // Occurrences
  ////////////////////////////////////////////////////////////////////////

  //! The `ordinal`-th from the left occurrence of `variable`, found at
  //! 0-based `position`.
  struct OccurrenceRef {
    Variable    variable;
    std::size_t ordinal;
    std::size_t position;

    friend bool operator==(OccurrenceRef const&, OccurrenceRef const&)
        = default;
  };

  inline OccurrenceRef occurrence_at(Word const& u, std::size_t position) {
    if (position >= u.size()) {
      throw std::out_of_range("occurrence position out of range");
    }
    auto const& x = u[position];
    std::size_t ordinal
        = 1
          + static_cast<std::size_t>(std::count(
              u.begin(), u.begin() + static_cast<std::ptrdiff_t>(position), x));
    return {x, ordinal, position};
  }

  inline bool is_first_occurrence(OccurrenceRef const& c) {
    return c.ordinal == 1;
  }

  inline bool is_last_occurrence(Word const& u, OccurrenceRef const& c) {
    return c.ordinal == u.occurrences(c.variable);
  }

  ////////////////////////////////////////////////////////////////////////
  // Restriction, blocks
  ////////////////////////////////////////////////////////////////////////

  //! u(X): deletes every occurrence of a variable outside X.
  inline Word restrict(Word const& u, VariableSet const& keep) {
    Word result;
    for (auto const& x : u) {
      if (keep.contains(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  struct BlockDecomposition {
    //! k linear variables give k + 1 blocks, some possibly empty.
    std::vector<Word>     blocks;
    std::vector<Variable> skeleton;

    [[nodiscard]] Word reassemble() const {
      Word result;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        result += blocks[i];
        if (i < skeleton.size()) {
          result.push_back(skeleton[i]);
        }
      }
      return result;
    }

    //! Index of the block starting each segment, as positions in the word.
    [[nodiscard]] std::vector<std::size_t> block_offsets() const {
      std::vector<std::size_t> result;
      std::size_t              pos = 0;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        result.push_back(pos);
        pos += blocks[i].size() + 1;
      }
      return result;
    }
  };

  inline BlockDecomposition blocks(Word const& u) {
    auto const         linear = u.linear_variables();
    BlockDecomposition result;
    Word               current;
    for (auto const& x : u) {
      if (linear.contains(x)) {
        result.blocks.push_back(std::move(current));
        result.skeleton.push_back(x);
        current = Word();
      } else {
        current.push_back(x);
      }
    }
    result.blocks.push_back(std::move(current));
    return result;
  }

  inline bool is_block_n_simple(Word const& u, std::size_t n) {
    auto const dec = blocks(u);
    return std::all_of(dec.blocks.begin(), dec.blocks.end(),
                       [n](Word const& b) { return b.content().size() <= n; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Factors
  ////////////////////////////////////////////////////////////////////////

  //! Position of the first occurrence of `p` as a factor of `w` at or after
  //! `from`.
  inline std::optional<std::size_t>
  find_factor(Word const& p, Word const& w, std::size_t from = 0) {
    if (from > w.size()) {
      return std::nullopt;
    }
    auto it = std::search(w.begin() + static_cast<std::ptrdiff_t>(from),
                          w.end(), p.begin(), p.end());
    if (it == w.end() && !p.empty()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - w.begin());
  }

  inline bool is_factor(Word const& p, Word const& w) {
    return find_factor(p, w).has_value();
  }

  //! W^c: every contiguous factor of every word of W, including the empty
  //! word and the words themselves.
  inline std::set<Word> subword_closure(std::span<Word const> words) {
    std::set<Word> result;
    result.insert(Word());
    for (auto const& w : words) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
          result.insert(w.subword(i, len));
        }
      }
    }
    return result;
  }

  inline std::set<Word> subword_closure(std::vector<Word> const& words) {
    return subword_closure(std::span<Word const>(words));
  }

  inline VariableSet alphabet_of(std::span<Word const> words) {
    VariableSet result;
    for (auto const& w : words) {
      result.insert(w.begin(), w.end());
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitive roots and commutation
  ////////////////////////////////////////////////////////////////////////

  //! The shortest p with w = p^k.
  inline Word primitive_root(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("the empty word has no primitive root");
    }
    std::size_t const n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = w[i] == w[i - d];
      }
      if (periodic) {
        return w.prefix(d);
      }
    }
    return w;
  }

  inline bool commutes(Word const& u, Word const& v) {
    return u + v == v + u;
  }

  ////////////////////////////////////////////////////////////////////////
  // Renaming and the tilde transform
  ////////////////////////////////////////////////////////////////////////

  inline Word rename(Word const& u, std::map<Variable, Variable> const& map) {
    Word result;
    for (auto const& x : u) {
      auto it = map.find(x);
      result.push_back(it == map.end() ? x : it->second);
    }
    return result;
  }

  //! Replaces every maximal factor avoiding `a` and `b` by one fresh linear
  //! variable, and splits every factor `ab` as `a t b` with t fresh.
  inline Word tilde_transform(Word const&     u,
                              Variable const& a,
                              Variable const& b,
                              FreshNames&     fresh) {
    if (a == b) {
      throw std::invalid_argument("tilde transform needs distinct variables");
    }
    Word result;
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto const& x = u[i];
      if (x != a && x != b) {
        if (i == 0 || u[i - 1] == a || u[i - 1] == b) {
          result.push_back(fresh.next("t"));
        }
        continue;
      }
      if (x == b && i > 0 && u[i - 1] == a) {
        result.push_back(fresh.next("t"));
      }
      result.push_back(x);
    }
    return result;
  }

  inline Word tilde_transform(Word const&     u,
                              Variable const& a,
                              Variable const& b) {
    FreshNames fresh(u.content());
    return tilde_transform(u, a, b, fresh);
  }

}  // namespace fbword

template <>
struct std::hash<fbword::Variable> {
  std::size_t operator()(fbword::Variable const& x) const noexcept {
    return std::hash<std::string>{}(x.name());
  }
};

template <>
struct std::hash<fbword::Word> {
  std::size_t operator()(fbword::Word const& w) const noexcept {
    std::size_t h = 0;
    for (auto const& x : w) {
      h = h * 1000003u ^ std::hash<fbword::Variable>{}(x);
    }
    return h;
  }
};
