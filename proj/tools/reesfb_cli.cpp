// reesfb: command-line front end.
//
// Exit status: 0 on success, 2 when the input is out of scope or not
// decomposable, 1 on usage errors, 3 when an internal certificate check fails.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reesfb/acceptance.hpp"
#include "reesfb/classifier.hpp"
#include "reesfb/decompose.hpp"
#include "reesfb/derivation.hpp"
#include "reesfb/families.hpp"
#include "reesfb/isoterm.hpp"
#include "reesfb/report.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;

namespace {

  constexpr int exit_ok          = 0;
  constexpr int exit_usage       = 1;
  constexpr int exit_scope       = 2;
  constexpr int exit_certificate = 3;

  struct Input {
    std::string words;
    std::string file;

    WordSet load() const {
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
          throw std::invalid_argument("cannot read " + file);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return WordSet::parse_lines(buf.str());
      }
      if (words.empty()) {
        throw std::invalid_argument("no word set given (argument or --file)");
      }
      return WordSet::parse(words);
    }
  };

  void emit(bool json, Json const& j, std::string const& text) {
    if (json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees quotient monoids S(W): identities, isoterms and finite basis verdicts"};
  app.require_subcommand(1);
  app.fallthrough();

  bool        json = false;
  std::size_t n_max = 0, bound = 6;
  Input       input;
  app.add_flag("--json", json, "JSON output");

  auto add_input = [&](CLI::App* sub, char const* name = "words") {
    sub->add_option(name, input.words, "comma-separated words, e.g. abtba,aat");
    sub->add_option("--file", input.file, "word set, one word per line, # comments");
  };

  auto* classify_cmd = app.add_subcommand("classify", "FB/NFB verdict for 2-limited block-2-simple sets");
  add_input(classify_cmd);
  bool no_certify = false;
  classify_cmd->add_option("--n-max", n_max, "witness levels to verify (0: defaults)");
  classify_cmd->add_flag("--no-certify", no_certify, "skip certificate checks");

  auto*       isoterm_cmd = app.add_subcommand("isoterm", "is a word an isoterm for S(W)");
  std::string pattern;
  isoterm_cmd->add_option("--pattern", pattern, "pattern word")->required();
  add_input(isoterm_cmd, "--wordset");

  auto*       check_cmd = app.add_subcommand("check", "does S(W) satisfy an identity");
  std::string identity_text, method_text = "automatic";
  check_cmd->add_option("--identity", identity_text, "lhs=rhs")->required();
  check_cmd->add_option("--method", method_text, "automatic, exhaustive or instances")
      ->check(CLI::IsMember({"automatic", "exhaustive", "instances"}));
  add_input(check_cmd, "--wordset");

  auto* monoid_cmd = app.add_subcommand("monoid", "elements and Cayley table of S(W)");
  add_input(monoid_cmd);

  auto*       family_cmd = app.add_subcommand("family", "print a named identity or word family");
  std::string family_name;
  std::size_t family_n = 0;
  family_cmd->add_option("name", family_name, "family name, e.g. A3, sigma_1, witness_N1")
      ->required();
  family_cmd->add_option("--n", family_n, "family index where one applies");

  auto*       sigma_cmd = app.add_subcommand("sigma-k", "the identity set Sigma_k");
  std::size_t k = 1, n_cap = 0;
  sigma_cmd->add_option("--k", k, "k >= 1");
  sigma_cmd->add_option("--n-cap", n_cap, "largest n of w_n used (default 2k+3)");

  auto* isot2_cmd = app.add_subcommand("isot2", "isoterms of S(W) with at most two non-linear variables");
  add_input(isot2_cmd);
  std::size_t max_occ = 0;
  isot2_cmd->add_option("--max-occ", max_occ, "occurrence bound per non-linear variable");

  auto*       decompose_cmd = app.add_subcommand("decompose", "split a word into almost-linear pieces");
  std::string decompose_word;
  std::size_t verify_bound = 0;
  bool        canonical    = false;
  decompose_cmd->add_option("word", decompose_word, "word")->required();
  decompose_cmd->add_option("--verify-bound", verify_bound, "run the bounded equivalence check");
  decompose_cmd->add_flag("--canonical", canonical, "rename the result set canonically");

  auto* corpus_cmd = app.add_subcommand("corpus", "run the acceptance corpora");
  bool  skip_slow  = false;
  std::vector<int> only;
  corpus_cmd->add_flag("--skip-slow", skip_slow, "leave out slow criteria");
  corpus_cmd->add_option("--only", only, "criterion numbers");

  for (auto* sub : {check_cmd, decompose_cmd}) {
    sub->add_option("--bound", bound, "derivation/equivalence bound");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*classify_cmd) {
      auto w = input.load();
      auto v = classify(w);
      if (!v.scope.ok) {
        auto tests = standalone_nfb_tests(w);
        Json j     = to_json(v);
        j["standalone"] = to_json(tests);
        emit(json, j, render(v) + render(tests));
        return exit_scope;
      }
      if (!no_certify) {
        v = certify(w, v, n_max);
      }
      emit(json, to_json(v), render(v));
    } else if (*isoterm_cmd) {
      auto w = input.load();
      auto r = is_isoterm(Word::parse(pattern), w);
      emit(json, to_json(r), render(r));
    } else if (*check_cmd) {
      auto       w  = input.load();
      auto       id = Identity::parse(identity_text);
      ReesMonoid m(w);
      auto       method = method_text == "exhaustive"  ? SatisfactionMethod::exhaustive
                          : method_text == "instances" ? SatisfactionMethod::instances
                                                       : SatisfactionMethod::automatic;
      auto r = satisfies(m, id, method);
      emit(json, to_json(m, id, r), render(m, id, r));
    } else if (*monoid_cmd) {
      ReesMonoid m(input.load());
      emit(json, to_json(m), render(m));
    } else if (*family_cmd) {
      auto f = generate(family_name, family_n);
      emit(json, to_json(f), render(f));
    } else if (*sigma_cmd) {
      auto ids = sigma_k(k, n_cap ? n_cap : 2 * k + 3);
      Json j;
      j["k"]          = k;
      j["n_cap"]      = n_cap ? n_cap : 2 * k + 3;
      j["identities"] = to_json(ids);
      emit(json, j, to_string(ids) + "\n");
    } else if (*isot2_cmd) {
      auto w      = input.load();
      auto bounds = default_isot2_bounds(w);
      if (max_occ) {
        bounds.max_occ = max_occ;
      }
      auto words = isot2(w, bounds);
      Json j;
      j["input"]   = to_json(w);
      j["max_occ"] = bounds.max_occ;
      j["isot2"]   = to_json(words);
      std::string text;
      for (auto const& u : words) {
        text += u.str() + "\n";
      }
      emit(json, j, text);
    } else if (*decompose_cmd) {
      auto u = Word::parse(decompose_word);
      auto e = delblock_eligibility(u);
      if (!e.eligible) {
        Json j;
        j["source"]   = u.str();
        j["eligible"] = false;
        j["reason"]   = e.reason;
        emit(json, j, u.str() + ": not decomposable: " + e.reason + "\n");
        return exit_scope;
      }
      auto d = decompose(u, canonical);
      Json j = to_json(d);
      auto text = render(d);
      if (verify_bound) {
        auto c           = check_equivalence_bounded(u, d, verify_bound);
        j["verification"] = to_json(c);
        text += render(c);
      }
      emit(json, j, text);
    } else if (*corpus_cmd) {
      AcceptanceOptions options;
      options.include_slow = !skip_slow;
      options.only         = only;
      if (!json) {
        options.progress = [](CriterionResult const& r) { std::cout << format(r) << std::endl; };
      }
      auto results = run_acceptance(options);
      bool all     = true;
      Json a       = Json::array();
      for (auto const& r : results) {
        all = all && r.passed;
        Json j;
        j["criterion"] = r.id;
        j["title"]     = r.title;
        j["passed"]    = r.passed;
        j["slow"]      = r.slow;
        j["detail"]    = r.detail;
        a.push_back(std::move(j));
      }
      if (json) {
        std::cout << a.dump(2) << "\n";
      }
      return all ? exit_ok : exit_certificate;
    }
  } catch (CertificateError const& e) {
    std::cerr << "certificate check failed: " << e.what() << "\n";
    return exit_certificate;
  } catch (IneligibleError const& e) {
    std::cerr << e.what() << "\n";
    return exit_scope;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}
