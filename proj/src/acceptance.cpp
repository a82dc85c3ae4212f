#include "reesfb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "reesfb/classifier.hpp"
#include "reesfb/corpus.hpp"
#include "reesfb/decompose.hpp"
#include "reesfb/derivation.hpp"
#include "reesfb/families.hpp"
#include "reesfb/isoterm.hpp"
#include "reesfb/satisfaction.hpp"

namespace reesfb {

  namespace {
    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    struct Outcome {
      bool        passed = false;
      std::string detail;
    };

    // Collects failures, keeping the first few for the report line.
    struct Tally {
      std::size_t              checked = 0;
      std::size_t              failed  = 0;
      std::vector<std::string> examples;

      void check(bool ok, std::string const& what) {
        ++checked;
        if (!ok) {
          ++failed;
          if (examples.size() < 3) {
            examples.push_back(what);
          }
        }
      }

      std::string summary(std::string const& noun) const {
        std::ostringstream out;
        out << checked << " " << noun << ", " << failed << " failed";
        for (auto const& e : examples) {
          out << "; " << e;
        }
        return out.str();
      }
    };

    CaseId dual(CaseId c, bool both) {
      if (both) {
        return c;
      }
      switch (c) {
        case CaseId::F3:
          return CaseId::F4;
        case CaseId::F4:
          return CaseId::F3;
        case CaseId::F5:
          return CaseId::F6;
        case CaseId::F6:
          return CaseId::F5;
        default:
          return c;
      }
    }

    WordSet renamed(WordSet const& w) {
      std::vector<Word> words;
      for (auto const& u : w.words()) {
        std::vector<Variable> letters;
        for (auto x : u) {
          letters.emplace_back("q" + x.name());
        }
        words.emplace_back(std::move(letters));
      }
      return WordSet(std::move(words));
    }

    WordSet with_closure(WordSet const& w) {
      std::vector<Word> words;
      for (auto const& u : w.closure()) {
        if (!u.empty()) {
          words.push_back(u);
        }
      }
      return WordSet(std::move(words));
    }

    std::string verdict_name(Verdict const& v) {
      return std::string(to_string(v.kind)) + "/" + to_string(v.case_id);
    }

    IdentitySet concat(IdentitySet a, IdentitySet const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    ////////////////////////////////////////////////////////////////////////

    Outcome known_verdicts() {
      auto  t0 = Clock::now();
      Tally t;
      for (auto const& e : corpus1()) {
        auto v  = classify(e.words);
        bool ok = v.scope.ok;
        ok      = ok && (!e.expected || v.kind == *e.expected);
        ok      = ok && (!e.expected_case || v.case_id == *e.expected_case);
        t.check(ok, e.words.str() + " gave " + verdict_name(v));
      }
      double s = since(t0);
      return {t.failed == 0 && s < 60, t.summary("sets")};
    }

    Outcome fast_matches_oracle() {
      Tally       t;
      std::size_t defined = 0;
      for (auto const& w : corpus2()) {
        IsotermEngine e(w);
        for (auto const& p : battery::all()) {
          auto fast = e.is_isoterm_fast(p);
          if (!fast) {
            continue;
          }
          ++defined;
          t.check(*fast == e.is_isoterm(p), battery::name(p) + " on " + w.str());
        }
      }
      return {t.failed == 0 && defined > 0, t.summary("fast answers")};
    }

    Outcome invariance() {
      Tally t;
      for (auto const& w : corpus_all()) {
        auto v     = classify(w);
        auto r     = classify(w.reversed());
        auto want  = dual(v.case_id, v.both_duals);
        t.check(r.kind == v.kind && r.case_id == want,
                "reverse of " + w.str() + ": " + verdict_name(v) + " vs " + verdict_name(r));
        for (auto const& other : {renamed(w), w.canonical(), with_closure(w)}) {
          auto o = classify(other);
          t.check(o.kind == v.kind && o.case_id == v.case_id,
                  other.str() + ": " + verdict_name(o) + " vs " + verdict_name(v));
        }
      }
      return {t.failed == 0, t.summary("comparisons")};
    }

    Outcome a_bases_track_limits() {
      Tally t;
      for (auto const& w : corpus2()) {
        ReesMonoid m(w);
        for (std::size_t k = 1; k <= 3; ++k) {
          bool holds   = satisfies_all(m, basis_A(k + 1)).holds;
          bool limited = std::all_of(w.words().begin(), w.words().end(), [&](Word const& u) {
            return structure_profile(u).is_k_limited(k);
          });
          t.check(holds == limited, w.str() + " k=" + std::to_string(k));
        }
      }
      return {t.failed == 0, t.summary("checks")};
    }

    Outcome sigma_consequences() {
      Tally t;
      auto  left  = Identity::parse("xytxy=xytyx");
      auto  right = Identity::parse("xytxy=yxtxy");
      for (auto const& w : corpus_all()) {
        ReesMonoid m(w);
        if (satisfies(m, sigma_1()).holds) {
          t.check(satisfies(m, left).holds, w.str() + " " + left.str());
        }
        if (satisfies(m, sigma_2()).holds) {
          t.check(satisfies(m, right).holds, w.str() + " " + right.str());
        }
      }
      return {t.failed == 0, t.summary("implications")};
    }

    Outcome pattern_equivalences() {
      Tally                                  t;
      std::vector<std::pair<Word, Word>> const pairs = {
          {Word::parse("x[t1]xy[t2]y"), Word::parse("x[t1]yx[t2]y")},
          {Word::parse("xy[t1]x[t2]y"), Word::parse("yx[t1]x[t2]y")},
          {Word::parse("x[t1]y[t2]xy"), Word::parse("x[t1]y[t2]yx")},
      };
      for (auto const& w : corpus_all()) {
        IsotermEngine e(w);
        for (auto const& [p, q] : pairs) {
          t.check(e.is_isoterm(p) == e.is_isoterm(q), p.str() + "/" + q.str() + " on " + w.str());
        }
      }
      return {t.failed == 0, t.summary("pairs")};
    }

    Outcome certificates(VerdictKind kind, double limit) {
      Tally  t;
      double worst = 0;
      for (auto const& e : corpus1()) {
        auto v = classify(e.words);
        if (v.kind != kind) {
          continue;
        }
        auto t0 = Clock::now();
        try {
          auto c = certify(e.words, v).certificate;
          if (kind == VerdictKind::NFB) {
            if (c.witnesses.empty()) {
              continue;  // no witness family for this case
            }
            for (auto const& w : c.witnesses) {
              worst = std::max(worst, w.seconds);
              t.check(w.holds && w.seconds < limit,
                      e.words.str() + " " + w.family + " n=" + std::to_string(w.n));
            }
          } else {
            double s = since(t0);
            worst    = std::max(worst, s);
            bool ok  = !c.bases.empty() && s < limit;
            for (auto const& b : c.bases) {
              ok = ok && b.holds;
            }
            t.check(ok, e.words.str());
          }
        } catch (CertificateError const& err) {
          t.check(false, err.what());
        }
      }
      std::ostringstream out;
      out << t.summary(kind == VerdictKind::NFB ? "witness levels" : "bases") << ", slowest "
          << std::fixed << std::setprecision(2) << worst << "s";
      return {t.failed == 0 && t.checked > 0, out.str()};
    }

    Outcome sigma_k_reproduction() {
      Tally t;
      auto  seed = Identity::parse(
          "[x0]zxyp[x0][x2]zxyp[x2]=[x0]zyxp[x0][x2]zyxp[x2]");
      auto sigma1 = sigma_k(1, 4);
      t.check(sigma1 == delta_closure({seed}), "sigma_1 differs from the seed's deletion closure");
      for (std::size_t k = 1; k <= 2; ++k) {
        auto a = sigma_k(k, 2 * k + 3);
        auto b = sigma_k(k, 2 * k + 5);
        t.check(a == b, "sigma_" + std::to_string(k) + " not stable");
        for (auto const& id : b) {
          t.check(id.variables().size() <= 2 * k + 4, id.str() + " has too many variables");
        }
      }
      return {t.failed == 0, t.summary("checks")};
    }

    // Direct search for x, y, a1..ak with u(x, y, a1..ak) = xy a1^2 .. ak^2 xy.
    bool square_pattern_oracle(Word const& u, std::size_t k) {
      auto vars = u.non_linear_variables();
      for (auto x : vars) {
        for (auto y : vars) {
          if (x == y) {
            continue;
          }
          std::vector<Variable> rest;
          for (auto z : vars) {
            if (z != x && z != y) {
              rest.push_back(z);
            }
          }
          if (rest.size() < k) {
            continue;
          }
          std::vector<bool> pick(rest.size(), false);
          std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
          do {
            VariableSet keep{x, y};
            for (std::size_t i = 0; i < rest.size(); ++i) {
              if (pick[i]) {
                keep.insert(rest[i]);
              }
            }
            auto p  = project(u, keep);
            bool ok = p.size() == 2 * k + 4 && p[0] == x && p[1] == y
                      && p[p.size() - 2] == x && p[p.size() - 1] == y;
            for (std::size_t i = 0; ok && i < k; ++i) {
              ok = p[2 + 2 * i] == p[3 + 2 * i] && p[2 + 2 * i] != x && p[2 + 2 * i] != y;
            }
            if (ok) {
              return true;
            }
          } while (std::prev_permutation(pick.begin(), pick.end()));
        }
      }
      return false;
    }

    Outcome square_pattern_deletions() {
      Tally t;
      for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t n = 2; n <= 5; ++n) {
          auto                  w = jackson_w(n);
          std::vector<Variable> inner;
          for (std::size_t i = 1; i < n; ++i) {
            inner.emplace_back("x" + std::to_string(i));
          }
          for (std::size_t mask = 0; mask < (std::size_t(1) << inner.size()); ++mask) {
            VariableSet gone;
            for (std::size_t i = 0; i < inner.size(); ++i) {
              if (mask >> i & 1) {
                gone.insert(inner[i]);
              }
            }
            auto d      = delete_vars(w, gone);
            bool fast   = deletes_to_square_pattern(d, k);
            bool oracle = square_pattern_oracle(d, k);
            auto label  = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " " + d.str();
            t.check(fast == oracle, label + " disagrees with the direct search");
            if (n < 2 * k && gone.empty()) {
              t.check(!fast, label + " should not reach the pattern");
            }
            if (n >= 2 * k && gone.size() <= n - 2 * k) {
              t.check(fast, label + " should reach the pattern");
            }
          }
        }
      }
      return {t.failed == 0, t.summary("checks")};
    }

    Outcome sigma_1_basis_satisfaction() {
      Tally   t;
      WordSet U = WordSet::parse("abba,aabb,abcacb");
      auto    a3 = basis_A(3);
      t.check(satisfies_all(ReesMonoid(U), concat(a3, {Identity::parse("xytxy=yxtyx")})).holds,
              "S(U) fails its basis");
      std::vector<Word> words(U.words());
      for (auto text : {"babxyaxy", "abxyaxyb", "abbxyaxy", "abxybaxy"}) {
        auto u = Word::parse(text);
        words.push_back(u);
        words.push_back(reverse(u));
      }
      words.push_back(Word::parse("xyaaxy"));
      WordSet big(std::move(words));
      auto    sigma1 = sigma_k(1, 4);
      auto    r      = satisfies_all(ReesMonoid(big), concat(sigma1, a3));
      t.check(r.holds, "larger set fails " + (r.failed ? r.failed->str() : std::string("?")));
      t.check(is_isoterm_wrt(Word::parse("xyaaxy"), sigma1), "xyaaxy is moved by sigma_1");
      return {t.failed == 0, t.summary("checks")};
    }

    Outcome isot2_agreement() {
      Tally t;
      for (auto const& w : {WordSet::parse("abtab"), WordSet::parse("abtab,abtba")}) {
        WordSet i2(isot2(w, default_isot2_bounds(w)));
        auto    a = bounded_identity_agreement(w, i2, 7, 2);
        t.check(a.agree, w.str() + ": " + (a.counterexample ? a.counterexample->str() : ""));
      }
      return {t.failed == 0, t.summary("sets")};
    }

    Outcome decompositions() {
      Tally t;
      for (auto const& u : canonical_words(3, 6)) {
        if (!delblock_eligibility(u).eligible) {
          continue;
        }
        auto d = decompose(u);
        auto c = check_equivalence_bounded(u, d, 6);
        t.check(c.passed(), u.str() + " -> " + d.result.str());
      }
      t.check(!delblock_eligibility(Word::parse("abba")).eligible, "abba reported eligible");
      return {t.failed == 0, t.summary("words")};
    }

    Outcome structural_invariants() {
      Tally t;
      auto  corpus = corpus_all();
      for (auto const& w : corpus) {
        ReesMonoid m(w);
        if (m.size() > 64) {
          continue;
        }
        auto n  = static_cast<Element>(m.size());
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) {
          ok = m.multiply(ReesMonoid::one, a) == a && m.multiply(a, ReesMonoid::one) == a
               && m.multiply(ReesMonoid::zero, a) == ReesMonoid::zero
               && m.multiply(a, ReesMonoid::zero) == ReesMonoid::zero;
          for (Element b = 0; b < n && ok; ++b) {
            auto ab = m.multiply(a, b);
            if (a > ReesMonoid::one && b > ReesMonoid::one) {
              ok = ab == m.find(m.word(a) + m.word(b));
            }
            for (Element c = 0; c < n && ok; ++c) {
              ok = m.multiply(ab, c) == m.multiply(a, m.multiply(b, c));
            }
          }
        }
        t.check(ok, "table laws on " + w.str());
      }

      IdentitySet probes = concat(basis_A(3),
                                  {sigma_mu(), sigma_1(), sigma_2(),
                                   Identity::parse("xytxy=xytyx"), Identity::parse("xytxy=yxtxy"),
                                   Identity::parse("xxyty=yxxty"), Identity::parse("ytyxx=ytxxy"),
                                   Identity::parse("xyxy=yxyx"), Identity::parse("xyyx=yxxy"),
                                   Identity::parse("xxyy=yyxx")});
      std::mt19937                         rng(20240611);
      std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
      for (int i = 0; i < 100; ++i) {
        auto const& w1 = corpus[pick(rng)];
        auto const& w2 = corpus[pick(rng)];
        ReesMonoid  m1(w1), m2(w2), m12(w1.united(w2));
        for (auto const& id : probes) {
          bool whole = satisfies(m12, id).holds;
          bool parts = satisfies(m1, id).holds && satisfies(m2, id).holds;
          t.check(whole == parts, id.str() + " on " + w1.str() + " + " + w2.str());
        }
      }

      for (auto const& w : corpus) {
        IsotermEngine e(w);
        for (auto const& u : w.words()) {
          t.check(e.is_isoterm(u), u.str() + " not an isoterm for its own S(W)");
        }
      }
      return {t.failed == 0, t.summary("checks")};
    }

    struct Criterion {
      char const* title;
      bool        slow;
      Outcome (*run)();
    };

    Criterion const& criterion(int id) {
      static Criterion const all[] = {
          {"known classifier verdicts", false, known_verdicts},
          {"fast isoterm checks agree with the oracle", false, fast_matches_oracle},
          {"reversal, renaming and closure invariance", false, invariance},
          {"A_{k+1} holds iff k-limited", false, a_bases_track_limits},
          {"sigma_1 and sigma_2 consequences", false, sigma_consequences},
          {"isoterm equivalences of battery pairs", false, pattern_equivalences},
          {"NFB witness levels", false, [] { return certificates(VerdictKind::NFB, 30); }},
          {"FB bases", false, [] { return certificates(VerdictKind::FB, 5); }},
          {"sigma_k closure and stability", false, sigma_k_reproduction},
          {"square-pattern deletions of w_n", false, square_pattern_deletions},
          {"sigma_1 basis satisfaction", true, sigma_1_basis_satisfaction},
          {"S(W) and S(isot2(W)) agree up to length 7", false, isot2_agreement},
          {"decompositions agree at bound 6", false, decompositions},
          {"monoid, product and membership invariants", false, structural_invariants},
      };
      if (id < 1 || id > criterion_count) {
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
      }
      return all[id - 1];
    }
  }  // namespace

  CriterionResult run_criterion(int id) {
    auto const&     c = criterion(id);
    CriterionResult r;
    r.id    = id;
    r.title = c.title;
    r.slow  = c.slow;
    auto t0 = Clock::now();
    try {
      auto o   = c.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (std::exception const& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(t0);
    return r;
  }

  std::vector<CriterionResult> run_acceptance(AcceptanceOptions const& options) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= criterion_count; ++id) {
      if (!options.only.empty()
          && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
        continue;
      }
      if (!options.include_slow && criterion(id).slow) {
        continue;
      }
      results.push_back(run_criterion(id));
      if (options.progress) {
        options.progress(results.back());
      }
    }
    return results;
  }

  std::string format(CriterionResult const& r) {
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << " " << r.title
        << (r.slow ? " [slow]" : "") << " (" << std::fixed << std::setprecision(2) << r.seconds
        << "s): " << r.detail;
    return out.str();
  }

}  // namespace reesfb
