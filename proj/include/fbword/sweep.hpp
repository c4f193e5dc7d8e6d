// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Exhaustive cross-validation over short words: the decision procedures
// checked against each other and against the exact oracle.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "classifier.hpp"
#include "monoid.hpp"
#include "sigma.hpp"
#include "word.hpp"

namespace fbword {

  enum class SweepCheck {
    two_letter,
    firstsim,
    factor_closure,
    route_agreement,
    hereditary,
    sigma_linkage
  };

  inline constexpr SweepCheck all_sweep_checks[]
      = {SweepCheck::two_letter,      SweepCheck::firstsim,
         SweepCheck::factor_closure,  SweepCheck::route_agreement,
         SweepCheck::hereditary,      SweepCheck::sigma_linkage};

  inline std::string_view to_string(SweepCheck c) {
    switch (c) {
      case SweepCheck::two_letter:
        return "two-letter";
      case SweepCheck::firstsim:
        return "firstsim";
      case SweepCheck::factor_closure:
        return "factor-closure";
      case SweepCheck::route_agreement:
        return "route-agreement";
      case SweepCheck::hereditary:
        return "hereditary";
      case SweepCheck::sigma_linkage:
        return "sigma-linkage";
    }
    return "?";
  }

  inline SweepCheck parse_sweep_check(std::string_view name) {
    for (auto c : all_sweep_checks) {
      if (to_string(c) == name) {
        return c;
      }
    }
    throw std::invalid_argument("unknown sweep check '" + std::string(name)
                                + "'");
  }

  struct SweepConfig {
    //! Non-linear letters a, b, … (at most 2).
    std::size_t letters = 2;
    std::size_t max_length = 8;
    //! Distinct linear markers t1, t2, … inserted in increasing order.
    std::size_t             max_markers = 0;
    std::vector<SweepCheck> checks{SweepCheck::two_letter};
    std::size_t             workers = 1;
    std::size_t             cap     = 1'000'000;
  };

  class sweep_cap_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct SweepFailure {
    Word        word;
    SweepCheck  check;
    std::string detail;
  };

  struct SweepReport {
    std::size_t               total        = 0;
    std::size_t               inconclusive = 0;
    std::vector<SweepFailure> failures;
    double                    runtime_seconds = 0;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  namespace detail {
    inline std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    inline void validate(SweepConfig const& config) {
      if (config.letters < 1 || config.letters > 2) {
        throw std::invalid_argument("the sweep uses one or two letters");
      }
      if (config.max_length < 1) {
        throw std::invalid_argument("the maximum length must be positive");
      }
      if (config.checks.empty()) {
        throw std::invalid_argument("no sweep checks selected");
      }
    }
  }  // namespace detail

  //! Number of words the sweep visits.
  inline std::size_t sweep_word_count(SweepConfig const& config) {
    std::size_t total = 0;
    for (std::size_t len = 1; len <= config.max_length; ++len) {
      for (std::size_t j = 0; j <= std::min(len, config.max_markers); ++j) {
        std::size_t letters = 1;
        for (std::size_t i = 0; i < len - j; ++i) {
          letters *= config.letters;
        }
        total += detail::binomial(len, j) * letters;
      }
    }
    return total;
  }

  //! Every non-empty word over the letters and the markers, by length,
  //! then by marker count, then by positions and letters.
  inline std::vector<Word> sweep_words(SweepConfig const& config) {
    detail::validate(config);
    std::vector<Variable> const letters
        = config.letters == 1 ? std::vector<Variable>{Variable("a")}
                              : std::vector<Variable>{Variable("a"),
                                                      Variable("b")};
    std::vector<Word> result;
    for (std::size_t len = 1; len <= config.max_length; ++len) {
      for (std::size_t j = 0; j <= std::min(len, config.max_markers); ++j) {
        // Marker positions as a bitmask with j bits set.
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
          if (static_cast<std::size_t>(__builtin_popcount(mask)) != j) {
            continue;
          }
          std::size_t const free = len - j;
          std::size_t       combos = 1;
          for (std::size_t i = 0; i < free; ++i) {
            combos *= letters.size();
          }
          for (std::size_t code = 0; code < combos; ++code) {
            Word        w;
            std::size_t c      = code;
            std::size_t marker = 0;
            std::vector<Variable> picked(free, letters[0]);
            for (std::size_t i = free; i-- > 0;) {
              picked[i] = letters[c % letters.size()];
              c /= letters.size();
            }
            std::size_t next_letter = 0;
            for (std::size_t pos = 0; pos < len; ++pos) {
              if (mask & (1u << pos)) {
                w.push_back(Variable("t" + std::to_string(++marker)));
              } else {
                w.push_back(picked[next_letter++]);
              }
            }
            result.push_back(std::move(w));
          }
        }
      }
    }
    return result;
  }

  //! a^n b^m or a^n b a^m modulo swapping the letters (n, m ≥ 0).
  inline bool two_letter_shape(Word const& u) {
    if (u.empty()) {
      return true;
    }
    // Runs of letters.
    std::vector<std::pair<Variable, std::size_t>> runs;
    for (auto const& x : u) {
      if (!runs.empty() && runs.back().first == x) {
        ++runs.back().second;
      } else {
        runs.emplace_back(x, 1);
      }
    }
    if (runs.size() <= 2) {
      return true;
    }
    return runs.size() == 3 && runs[1].second == 1;
  }

  namespace detail {
    inline void run_checks(Word const&                    u,
                           std::vector<SweepCheck> const& checks,
                           std::vector<SweepFailure>&     failures,
                           std::size_t&                   inconclusive) {
      auto const in_scope = u.nonlinear_variables().size() <= 2;
      std::optional<Classification> c;
      auto classification = [&]() -> Classification const& {
        if (!c) {
          c = classify_word(u);
        }
        return *c;
      };
      auto fail = [&](SweepCheck check, std::string detail) {
        failures.push_back({u, check, std::move(detail)});
      };
      for (auto check : checks) {
        switch (check) {
          case SweepCheck::two_letter: {
            bool const has_marker = std::any_of(
                u.begin(), u.end(),
                [](Variable const& x) { return x.name()[0] == 't'; });
            if (has_marker) {
              break;
            }
            bool const fb    = classification().verdict == Verdict::fb;
            bool const shape = two_letter_shape(u);
            if (fb != shape) {
              fail(check, std::string("classify ") + (fb ? "FB" : "NFB")
                              + " but shape test "
                              + (shape ? "matches" : "does not match"));
            }
            break;
          }
          case SweepCheck::firstsim: {
            std::vector<Word> const words{u};
            DilworthMonoid const    monoid(words);
            bool                    sigma_holds[8] = {};
            for (auto s : all_sigmas) {
              sigma_holds[static_cast<int>(s)]
                  = satisfies_identity(monoid, sigma_identity(s)).holds;
            }
            for (auto set : SigmaSet::nonempty_subsets()) {
              bool oracle = true;
              for (auto s : set.members()) {
                oracle = oracle && sigma_holds[static_cast<int>(s)];
              }
              bool const syntactic = satisfies_sigma_syntactic(words, set);
              if (oracle != syntactic) {
                fail(check, "set {" + set.to_string() + "}: oracle "
                                + (oracle ? "holds" : "fails") + ", syntactic "
                                + (syntactic ? "holds" : "fails"));
              }
            }
            break;
          }
          case SweepCheck::factor_closure: {
            if (!in_scope || classification().verdict != Verdict::fb) {
              break;
            }
            for (auto const& f : subword_closure(std::vector<Word>{u})) {
              if (classify_word(f).verdict != Verdict::fb) {
                fail(check, "factor " + f.to_string() + " is NFB");
                break;
              }
            }
            break;
          }
          case SweepCheck::route_agreement: {
            if (!in_scope) {
              break;
            }
            auto const main = classify_word_main_route(u);
            if (main.inconclusive()) {
              ++inconclusive;
              fail(check, "isoterm route inconclusive");
              break;
            }
            auto const& block = classification();
            if (main.verdict != block.verdict
                || main.hereditary != block.hereditary) {
              fail(check, std::string("block route ")
                              + std::string(to_string(block.verdict)) + "/"
                              + std::string(to_string(block.reason))
                              + ", isoterm route "
                              + std::string(to_string(main.verdict)) + "/"
                              + std::string(to_string(main.reason)));
            }
            break;
          }
          case SweepCheck::hereditary: {
            if (!in_scope) {
              break;
            }
            bool const set  = classify_hfb_set(std::vector<Word>{u}).hereditary;
            bool const word = classification().hereditary;
            if (set != word) {
              fail(check, std::string("set test ") + (set ? "HFB" : "not HFB")
                              + ", word classifier "
                              + (word ? "hereditary" : "not hereditary"));
            }
            break;
          }
          case SweepCheck::sigma_linkage: {
            if (!in_scope
                || classification().reason
                       != Reason::single_mixed_block_pattern) {
              break;
            }
            if (!satisfies_sigma_syntactic(std::vector<Word>{u},
                                           SigmaSet{Sigma::s1, Sigma::s2})) {
              fail(check, "S({U}) does not satisfy {s1, s2}");
            }
            break;
          }
        }
      }
    }
  }  // namespace detail

  //! Runs the selected checks on every word; throws sweep_cap_exceeded when
  //! the word count exceeds config.cap. The report does not depend on the
  //! number of workers.
  inline SweepReport run_sweep(SweepConfig const& config) {
    detail::validate(config);
    auto const estimate = sweep_word_count(config);
    if (estimate > config.cap) {
      throw sweep_cap_exceeded("sweep would visit " + std::to_string(estimate)
                               + " words, cap is "
                               + std::to_string(config.cap));
    }
    auto const  started = std::chrono::steady_clock::now();
    auto const  words   = sweep_words(config);
    std::size_t workers = std::max<std::size_t>(1, config.workers);
    workers             = std::min(workers, std::max<std::size_t>(1, words.size()));

    struct Partial {
      std::vector<std::pair<std::size_t, SweepFailure>> failures;
      std::size_t                                       inconclusive = 0;
    };
    std::vector<Partial> partials(workers);
    auto work = [&](std::size_t id) {
      auto& partial = partials[id];
      for (std::size_t i = id; i < words.size(); i += workers) {
        std::vector<SweepFailure> local;
        detail::run_checks(words[i], config.checks, local,
                           partial.inconclusive);
        for (auto& f : local) {
          partial.failures.emplace_back(i, std::move(f));
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t id = 0; id < workers; ++id) {
        threads.emplace_back(work, id);
      }
      for (auto& t : threads) {
        t.join();
      }
    }

    std::vector<std::pair<std::size_t, SweepFailure>> merged;
    SweepReport                                       report;
    report.total = words.size();
    for (auto& p : partials) {
      report.inconclusive += p.inconclusive;
      for (auto& f : p.failures) {
        merged.push_back(std::move(f));
      }
    }
    std::stable_sort(merged.begin(), merged.end(),
                     [](auto const& x, auto const& y) {
                       return x.first < y.first;
                     });
    for (auto& [index, f] : merged) {
      report.failures.push_back(std::move(f));
    }
    report.runtime_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
    return report;
  }

}  // namespace fbword
