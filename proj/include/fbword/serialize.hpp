// fbword - finite basis decisions for Dilworth monoids S(W)
//
// JSON encodings (schema "fbword/1"). Requires nlohmann/json on the include
// path.

#pragma once

#include <string>

#include <json.hpp>

#include "classifier.hpp"
#include "identity.hpp"
#include "monoid.hpp"
#include "precedence.hpp"
#include "sweep.hpp"
#include "witness.hpp"
#include "word.hpp"

namespace fbword {

  inline constexpr char const* json_schema = "fbword/1";

  //! Words are arrays of variable tokens.
  inline void to_json(nlohmann::json& j, Word const& w) {
    j = w.tokens();
  }

  inline void to_json(nlohmann::json& j, Identity const& id) {
    j = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"text", id.to_string()}};
  }

  //! Substitutions map each variable name to its image as a token string.
  inline void to_json(nlohmann::json& j, Substitution const& theta) {
    j = nlohmann::json::object();
    for (auto const& [x, image] : theta.images()) {
      j[x.name()] = image.to_string();
    }
  }

  inline void to_json(nlohmann::json& j, OracleVerdict const& v) {
    j = {{"holds", v.holds}};
    j["refutation"] = v.refutation ? nlohmann::json(*v.refutation)
                                   : nlohmann::json(nullptr);
  }

  inline void to_json(nlohmann::json& j, PrecedenceVerdict const& v) {
    j = {{"outcome", to_string(v.outcome)}};
    j["witness"]
        = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
    j["factor"]
        = v.factor ? nlohmann::json(v.factor->to_string()) : nlohmann::json(nullptr);
  }

  inline void to_json(nlohmann::json& j, IsotermVerdict const& v) {
    if (v.found_partner()) {
      j = {{"outcome", "NotIsoterm"}, {"partner", v.partner->to_string()}};
    } else {
      j = {{"outcome", "NoWitnessUpTo"}, {"bound", v.bound}};
    }
  }

  inline void to_json(nlohmann::json& j, DilworthMonoid const& m) {
    nlohmann::json elements = nlohmann::json::array();
    for (auto const& w : m.factors()) {
      elements.push_back(w.empty() ? std::string("1") : w.to_string());
    }
    nlohmann::json alphabet = nlohmann::json::array();
    for (auto const& x : m.alphabet()) {
      alphabet.push_back(x.name());
    }
    j = {{"schema", json_schema},
         {"alphabet", alphabet},
         {"elements", elements},
         {"zero", "0"},
         {"size", m.size()}};
  }

  inline void to_json(nlohmann::json& j, Classification const& c) {
    j = {{"schema", json_schema},
         {"verdict", to_string(c.verdict)},
         {"hereditary", c.hereditary},
         {"reason", to_string(c.reason)},
         {"trace", c.trace}};
    j["family"] = c.verdict == Verdict::nfb ? nlohmann::json(family_label(c.family))
                                            : nlohmann::json(nullptr);
    if (c.k) {
      j["k"] = *c.k;
    }
    if (c.absent_pattern) {
      j["absent_pattern"] = c.absent_pattern->to_string();
    }
  }

  inline void to_json(nlohmann::json& j, FamilyReport const& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"n", c.n},
                        {"identity", c.identity.to_string()},
                        {"holds", c.verdict.holds},
                        {"refutation", c.verdict.refutation
                                           ? nlohmann::json(*c.verdict.refutation)
                                           : nlohmann::json(nullptr)},
                        {"balanced", c.balanced},
                        {"meets_table_threshold", c.meets_table_threshold},
                        {"meets_lemma_threshold", c.meets_lemma_threshold}});
    }
    nlohmann::json hypotheses = nlohmann::json::array();
    for (auto const& h : r.hypotheses) {
      hypotheses.push_back(
          {{"description", h.description}, {"status", to_string(h.status)}});
    }
    j = {{"schema", json_schema},
         {"family", to_string(r.family)},
         {"all_hold", r.all_hold()},
         {"checks", checks},
         {"hypotheses", hypotheses}};
  }

  inline void to_json(nlohmann::json& j, SweepReport const& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (auto const& f : r.failures) {
      failures.push_back({{"word", f.word.to_string()},
                          {"check", to_string(f.check)},
                          {"detail", f.detail}});
    }
    j = {{"schema", json_schema},
         {"total", r.total},
         {"inconclusive", r.inconclusive},
         {"failures", failures},
         {"runtime", r.runtime_seconds}};
  }

}  // namespace fbword
