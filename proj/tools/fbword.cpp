// fbword command-line interface.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbword/fbword.hpp"
#include "fbword/serialize.hpp"

using nlohmann::json;
using namespace fbword;

namespace {

  enum ExitCode {
    exit_ok           = 0,
    exit_failure      = 1,
    exit_usage        = 2,
    exit_nfb          = 3,
    exit_out_of_scope = 4,
    exit_cap_exceeded = 5
  };

  struct Globals {
    bool json         = false;
    bool no_t_convention = false;

    [[nodiscard]] bool t_convention() const {
      return !no_t_convention;
    }
  };

  std::vector<Word> parse_words(std::vector<std::string> const& texts,
                                Globals const&                  g) {
    std::vector<Word> result;
    for (auto const& t : texts) {
      result.push_back(parse_word(t, g.t_convention()));
    }
    return result;
  }

  std::vector<std::size_t> parse_list(std::string const& text) {
    std::vector<std::size_t> result;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) {
        result.push_back(std::stoul(item));
      }
    }
    return result;
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  std::string render(Substitution const& theta) {
    std::string out;
    for (auto const& [x, image] : theta.images()) {
      if (!out.empty()) {
        out += ", ";
      }
      out += x.name() + " -> " + (image.empty() ? "1" : image.to_string());
    }
    return "{" + out + "}";
  }

  int cmd_classify(std::string const& text, Globals const& g) {
    Word const w = parse_word(text, g.t_convention());
    auto const c = classify_word(w);
    if (g.json) {
      json j       = c;
      j["input"]   = text;
      print_json(j);
    } else {
      std::cout << to_string(c.verdict) << " (" << to_string(c.reason) << ")";
      if (c.hereditary) {
        std::cout << ", hereditary";
      }
      if (c.verdict == Verdict::nfb) {
        std::cout << ", witness family " << family_label(c.family);
      }
      std::cout << '\n';
      for (auto const& line : c.trace) {
        std::cout << "  " << line << '\n';
      }
    }
    switch (c.verdict) {
      case Verdict::fb:
        return exit_ok;
      case Verdict::nfb:
        return exit_nfb;
      default:
        return exit_out_of_scope;
    }
  }

  int cmd_classify_set(std::vector<std::string> const& texts,
                       Globals const&                  g) {
    auto const words  = parse_words(texts, g);
    auto const result = classify_hfb_set(words);
    if (g.json) {
      print_json({{"schema", json_schema},
                  {"input", texts},
                  {"hereditary", result.hereditary},
                  {"form", to_string(result.form)}});
    } else {
      std::cout << (result.hereditary ? "HFB" : "not HFB") << " ("
                << to_string(result.form) << ")\n";
    }
    return result.hereditary ? exit_ok : exit_nfb;
  }

  int cmd_blocks(std::string const& text, Globals const& g) {
    Word const w   = parse_word(text, g.t_convention());
    auto const dec = blocks(w);
    if (g.json) {
      json skeleton = json::array();
      for (auto const& t : dec.skeleton) {
        skeleton.push_back(t.name());
      }
      print_json({{"schema", json_schema},
                  {"input", text},
                  {"blocks", dec.blocks},
                  {"skeleton", skeleton}});
      return exit_ok;
    }
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      std::cout << "block " << i << ": "
                << (dec.blocks[i].empty() ? "1" : dec.blocks[i].to_string())
                << '\n';
      if (i < dec.skeleton.size()) {
        std::cout << "linear: " << dec.skeleton[i].name() << '\n';
      }
    }
    return exit_ok;
  }

  int cmd_sigma(std::vector<std::string> const& texts,
                std::string const&              set_text,
                bool                            oracle,
                Globals const&                  g) {
    auto const words = parse_words(texts, g);
    auto const set   = SigmaSet::parse(set_text);
    bool const syntactic = satisfies_sigma_syntactic(words, set);
    json       j{{"schema", json_schema},
           {"set", set.to_string()},
           {"syntactic", syntactic}};
    std::optional<bool> exact;
    if (oracle) {
      DilworthMonoid const monoid(words);
      exact = true;
      json per = json::object();
      for (auto s : set.members()) {
        auto v = satisfies_identity(monoid, sigma_identity(s));
        per[std::string(to_string(s))] = v;
        exact = *exact && v.holds;
      }
      j["oracle"]     = *exact;
      j["identities"] = per;
    }
    if (g.json) {
      print_json(j);
    } else {
      std::cout << "S(W) satisfies {" << set.to_string()
                << "}: " << (syntactic ? "yes" : "no") << " (syntactic)";
      if (exact) {
        std::cout << ", " << (*exact ? "yes" : "no") << " (oracle)";
      }
      std::cout << '\n';
    }
    return exit_ok;
  }

  int cmd_max_membership(std::vector<std::string> const& texts,
                         std::string const&              set_text,
                         Globals const&                  g) {
    auto const words = parse_words(texts, g);
    auto const set   = SigmaSet::parse(set_text);
    json       j     = json::array();
    bool       all   = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
      bool const in = in_max(words[i], set);
      all           = all && in;
      j.push_back({{"word", texts[i]}, {"member", in}});
      if (!g.json) {
        std::cout << texts[i] << ": " << (in ? "in" : "not in") << " Max({"
                  << set.to_string() << "})\n";
      }
    }
    if (g.json) {
      print_json({{"schema", json_schema},
                  {"set", set.to_string()},
                  {"words", j},
                  {"all", all}});
    }
    return exit_ok;
  }

  int cmd_monoid(std::vector<std::string> const& texts, Globals const& g) {
    DilworthMonoid const monoid(parse_words(texts, g));
    if (g.json) {
      print_json(json(monoid));
      return exit_ok;
    }
    std::cout << "|S(W)| = " << monoid.size() << '\n';
    for (auto const& e : monoid.elements()) {
      std::cout << e.to_string() << '\n';
    }
    return exit_ok;
  }

  int cmd_identity(std::vector<std::string> const& texts, Globals const& g) {
    if (texts.size() < 2) {
      throw std::invalid_argument("identity needs words of W and an identity");
    }
    std::vector<std::string> const word_texts(texts.begin(), texts.end() - 1);
    auto const     words = parse_words(word_texts, g);
    Identity const id    = parse_identity(texts.back(), g.t_convention());
    auto const     v     = satisfies_identity(words, id);
    if (g.json) {
      json j        = v;
      j["schema"]   = json_schema;
      j["identity"] = id;
      print_json(j);
    } else {
      std::cout << id.to_string() << ": " << (v.holds ? "holds" : "fails")
                << '\n';
      if (v.refutation) {
        std::cout << "refutation " << render(*v.refutation) << '\n';
      }
    }
    return exit_ok;
  }

  int cmd_isoterm(std::vector<std::string> const& texts,
                  std::string const&              u_text,
                  std::optional<std::size_t>      max_len,
                  Globals const&                  g) {
    auto const  words = parse_words(texts, g);
    Word const  u     = parse_word(u_text, g.t_convention());
    std::size_t bound = max_len.value_or(u.size() + 2);
    auto const  v     = bounded_isoterm(words, u, bound);
    if (g.json) {
      json j      = v;
      j["schema"] = json_schema;
      j["word"]   = u;
      print_json(j);
    } else if (v.found_partner()) {
      std::cout << "not an isoterm: S(W) satisfies " << u.to_string()
                << " ≈ " << v.partner->to_string() << '\n';
    } else {
      std::cout << "no partner of length at most " << v.bound << '\n';
    }
    return exit_ok;
  }

  int cmd_preceq(std::vector<std::string> const& texts,
                 std::string const&              target,
                 Globals const&                  g) {
    auto const        words = parse_words(texts, g);
    PrecedenceVerdict v;
    std::string       method;
    if (target == "xytxy") {
      v      = preceq_xytxy(words);
      method = "exact";
    } else if (target == "xytyx") {
      v      = preceq_xytyx(words);
      method = "exact for block-2-simple W";
    } else if (target == "xytxty" || target == "xtytxy" || target == "xtxyty") {
      Sigma const s = target == "xytxty"   ? Sigma::s1
                      : target == "xtytxy" ? Sigma::s2
                                           : Sigma::smu;
      v             = preceq_sigma_side(words, s);
      method        = "exact via the identity " + std::string(to_string(s));
    } else if (target == "power") {
      auto const w = max_power_witness(words);
      if (g.json) {
        print_json({{"schema", json_schema},
                    {"m", w.m},
                    {"base_x", w.base_x.to_string()},
                    {"base_y", w.base_y.to_string()},
                    {"factor", w.factor.to_string()}});
      } else {
        std::cout << "max m with W ⪯ x^m y^m: " << w.m << '\n';
        if (w.m > 0) {
          std::cout << "factor " << w.factor.to_string() << " = ("
                    << w.base_x.to_string() << ")^" << w.m << " ("
                    << w.base_y.to_string() << ")^" << w.m << '\n';
        }
      }
      return exit_ok;
    } else {
      v      = preceq_instance(words, parse_word(target, g.t_convention()));
      method = "instance search";
    }
    if (g.json) {
      json j      = v;
      j["schema"] = json_schema;
      j["target"] = target;
      j["method"] = method;
      print_json(j);
    } else {
      std::cout << to_string(v.outcome) << " (" << method << ")\n";
      if (v.factor) {
        std::cout << "factor " << v.factor->to_string() << '\n';
      }
      if (v.witness) {
        std::cout << "witness " << render(*v.witness) << '\n';
      }
    }
    return exit_ok;
  }

  WitnessFamily parse_family(std::string const& name, Word const& u) {
    if (name == "auto") {
      auto f = identify_witness_family(u);
      if (!f) {
        throw std::invalid_argument("no witness family has its hypotheses "
                                    "verified for this word");
      }
      return *f;
    }
    if (name == "abba") {
      return extract_abba_decomposition(u).case_number() == 1
                 ? WitnessFamily::abba_case1
                 : WitnessFamily::abba_case2;
    }
    if (name == "ababa") {
      return WitnessFamily::ababa;
    }
    if (name.size() == 4 && name.rfind("row", 0) == 0 && name[3] >= '1'
        && name[3] <= '7') {
      return static_cast<WitnessFamily>(name[3] - '0');
    }
    throw std::invalid_argument("unknown family '" + name + "'");
  }

  int cmd_witness(std::string const& text,
                  std::string const& family_name,
                  std::string const& n_text,
                  bool               verify,
                  std::string const& perm_text,
                  std::size_t        k,
                  Globals const&     g) {
    Word const u = parse_word(text, g.t_convention());
    FamilySpec spec;
    spec.family   = parse_family(family_name, u);
    spec.source   = u;
    spec.params.k = k;
    if (!perm_text.empty()) {
      spec.params.permutation = parse_list(perm_text);
    }
    auto const ns = parse_list(n_text);
    if (verify) {
      auto const report = verify_family({u}, spec, ns);
      if (g.json) {
        json j     = report;
        j["input"] = text;
        print_json(j);
      } else {
        std::cout << "family " << to_string(report.family) << '\n';
        for (auto const& c : report.checks) {
          std::cout << "n=" << c.n << ": " << c.identity.to_string() << ": "
                    << (c.verdict.holds ? "holds" : "fails");
          if (c.verdict.refutation) {
            std::cout << ", refutation " << render(*c.verdict.refutation);
          }
          std::cout << '\n';
        }
        for (auto const& h : report.hypotheses) {
          std::cout << "hypothesis " << h.description << ": "
                    << to_string(h.status) << '\n';
        }
      }
      return report.all_hold() ? exit_ok : exit_failure;
    }
    json identities = json::array();
    for (auto n : ns) {
      auto const id = detail::family_identity({u}, spec, n);
      identities.push_back({{"n", n}, {"identity", id.to_string()}});
      if (!g.json) {
        std::cout << "n=" << n << ": " << id.to_string() << '\n';
      }
    }
    if (g.json) {
      print_json({{"schema", json_schema},
                  {"input", text},
                  {"family", to_string(spec.family)},
                  {"identities", identities}});
    }
    return exit_ok;
  }

  std::size_t sweep_cap() {
    if (char const* env = std::getenv("FBWORD_SWEEP_CAP")) {
      return std::stoul(env);
    }
    return 1'000'000;
  }

  int cmd_sweep(SweepConfig config,
                std::string const& checks_text,
                std::string const& report_path,
                Globals const&     g) {
    config.checks.clear();
    std::stringstream in(checks_text);
    std::string       item;
    while (std::getline(in, item, ',')) {
      config.checks.push_back(parse_sweep_check(item));
    }
    config.cap = sweep_cap();
    SweepReport report;
    try {
      report = run_sweep(config);
    } catch (sweep_cap_exceeded const& e) {
      std::cerr << "fbword: " << e.what() << '\n';
      return exit_cap_exceeded;
    }
    json j = report;
    j["config"] = {{"max_length", config.max_length},
                   {"markers", config.max_markers},
                   {"checks", checks_text}};
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      out << j.dump(2) << '\n';
    }
    if (g.json) {
      print_json(j);
    } else {
      std::cout << report.total << " words, " << report.failures.size()
                << " failures, " << report.inconclusive << " inconclusive\n";
      for (auto const& f : report.failures) {
        std::cout << "  " << f.word.to_string() << " [" << to_string(f.check)
                  << "] " << f.detail << '\n';
      }
    }
    return report.ok() ? exit_ok : exit_failure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite basis decisions for Dilworth monoids S(W)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--no-t-convention", g.no_t_convention,
               "Read a bare t as an ordinary variable");

  std::string              word;
  std::vector<std::string> words;
  std::string              set_text = "s1,smu,s2";
  bool                     oracle   = false;

  auto* classify = app.add_subcommand("classify", "FB/NFB verdict for a word");
  classify->add_option("word", word)->required();

  auto* classify_set
      = app.add_subcommand("classify-set", "Hereditary FB test for a set");
  classify_set->add_option("words", words)->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "Block decomposition");
  blocks_cmd->add_option("word", word)->required();

  auto* sigma = app.add_subcommand("sigma", "Does S(W) satisfy a set of the "
                                            "identities s1, smu, s2");
  sigma->add_option("words", words)->required();
  sigma->add_option("--set", set_text, "Comma-separated, e.g. s1,smu");
  sigma->add_flag("--oracle", oracle, "Also run the exact oracle");

  auto* max_cmd
      = app.add_subcommand("max-membership", "Membership in Max(A*, set)");
  max_cmd->add_option("words", words)->required();
  max_cmd->add_option("--set", set_text);

  auto* monoid = app.add_subcommand("monoid", "Elements of S(W)");
  monoid->add_option("words", words)->required();

  auto* identity
      = app.add_subcommand("identity", "Does S(W) satisfy lhs=rhs (last arg)");
  identity->add_option("args", words)->required();

  std::string                u_text;
  std::optional<std::size_t> max_len;
  auto* isoterm = app.add_subcommand("isoterm", "Bounded isoterm search");
  isoterm->add_option("words", words)->required();
  isoterm->add_option("--word", u_text, "The candidate isoterm")->required();
  isoterm->add_option("--max-len", max_len, "Partner length bound");

  std::string target;
  auto* preceq = app.add_subcommand("preceq", "W ⪯ target checks");
  preceq->add_option("words", words)->required();
  preceq
      ->add_option("--target", target,
                   "xytxy, xytyx, xytxty, xtytxy, xtxyty, power, or a word")
      ->required();

  std::string family = "auto";
  std::string n_text = "2,3";
  std::string perm_text;
  std::size_t k      = 3;
  bool        verify = false;
  auto* witness = app.add_subcommand("witness", "Witness identity families");
  witness->add_option("word", word)->required();
  witness->add_option("--family", family, "auto, row1..row7, abba, ababa");
  witness->add_option("--n", n_text, "Comma-separated indices");
  witness->add_flag("--verify", verify, "Run the oracle on each identity");
  witness->add_option("--perm", perm_text, "Row 3 permutation, 1-based");
  witness->add_option("--k", k, "Row 7 exponent");

  SweepConfig config;
  std::string checks_text = "two-letter";
  std::string report_path;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive cross-validation");
  sweep->add_option("--check", checks_text,
                    "two-letter, firstsim, factor-closure, route-agreement, "
                    "hereditary, sigma-linkage");
  sweep->add_option("--max-length", config.max_length);
  sweep->add_option("--markers", config.max_markers);
  sweep->add_option("--letters", config.letters);
  sweep->add_option("--workers", config.workers);
  sweep->add_option("--report", report_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*classify) {
      return cmd_classify(word, g);
    }
    if (*classify_set) {
      return cmd_classify_set(words, g);
    }
    if (*blocks_cmd) {
      return cmd_blocks(word, g);
    }
    if (*sigma) {
      return cmd_sigma(words, set_text, oracle, g);
    }
    if (*max_cmd) {
      return cmd_max_membership(words, set_text, g);
    }
    if (*monoid) {
      return cmd_monoid(words, g);
    }
    if (*identity) {
      return cmd_identity(words, g);
    }
    if (*isoterm) {
      return cmd_isoterm(words, u_text, max_len, g);
    }
    if (*preceq) {
      return cmd_preceq(words, target, g);
    }
    if (*witness) {
      return cmd_witness(word, family, n_text, verify, perm_text, k, g);
    }
    if (*sweep) {
      return cmd_sweep(config, checks_text, report_path, g);
    }
  } catch (parse_error const& e) {
    std::cerr << "fbword: parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "fbword: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "fbword: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
