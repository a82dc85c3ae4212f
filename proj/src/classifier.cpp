#include "reesfb/classifier.hpp"

#include <chrono>

#include "reesfb/families.hpp"
#include "reesfb/satisfaction.hpp"

namespace reesfb {

  namespace {
    enum Flag : std::size_t {
      XTXYTY,
      XYYX,
      YXXTY,
      YTXXY,
      XYTXY,
      XYTYX,
      XYT1XT2Y,
      XT1YT2XY,
      XXYY,
      XYXY
    };

    VerdictKind kind_of(CaseId c) {
      switch (c) {
        case CaseId::F1:
        case CaseId::F2:
        case CaseId::F3:
        case CaseId::F4:
        case CaseId::F5:
        case CaseId::F6:
        case CaseId::F34:
          return VerdictKind::FB;
        case CaseId::none:
          return VerdictKind::OutOfScope;
        default:
          return VerdictKind::NFB;
      }
    }

    // Witness family of an NFB case, empty when none is generated.
    std::string family_of(CaseId c) {
      switch (c) {
        case CaseId::N1:
          return "witness_N1";
        case CaseId::N2:
          return "witness_N2";
        case CaseId::N5:
          return "witness_N5";
        case CaseId::N6:
          return "witness_N6";
        case CaseId::N7:
          return "witness_N7";
        case CaseId::N8:
          return "witness_N8";
        default:
          return "";
      }
    }

    Identity family_member(std::string const& family, std::size_t n) {
      return generate(family, n).identities.at(0);
    }

    WitnessCheck check_witness(ReesMonoid const& m, std::string const& family, std::size_t n) {
      WitnessCheck c;
      c.family   = family;
      c.n        = n;
      c.identity = family_member(family, n);
      auto start = std::chrono::steady_clock::now();
      c.holds    = satisfies(m, c.identity).holds;
      c.seconds  = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return c;
    }

    BasisCheck check_basis(ReesMonoid const& m, std::string name, IdentitySet basis) {
      BasisCheck c;
      c.name   = std::move(name);
      c.basis  = std::move(basis);
      auto r   = satisfies_all(m, c.basis);
      c.holds  = r.holds;
      c.failed = r.failed;
      return c;
    }

    TraceEntry trace_entry(IsotermEngine& engine, Word const& p) {
      auto const& r = engine.report(p);
      TraceEntry  e;
      e.pattern = battery::name(p);
      e.isoterm = r.is_isoterm;
      e.mode    = r.mode;
      e.partner = r.partner;
      e.fast    = engine.is_isoterm_fast(p);
      return e;
    }
  }  // namespace

  char const* to_string(VerdictKind k) {
    switch (k) {
      case VerdictKind::FB:
        return "FB";
      case VerdictKind::NFB:
        return "NFB";
      case VerdictKind::OutOfScope:
        return "OutOfScope";
    }
    return "?";
  }

  char const* to_string(CaseId c) {
    static char const* const names[] = {"none", "F1", "F2", "F3", "F4", "F5", "F6", "F3/F4",
                                        "N1",   "N2", "N3", "N4", "N5", "N6", "N7", "N8"};
    return names[static_cast<std::size_t>(c)];
  }

  std::string describe(CaseId c) {
    switch (c) {
      case CaseId::F1:
        return "W ~ {aabb, abab, abba}; basis A3";
      case CaseId::F2:
        return "W ~ {aabb}; basis A3, sigma_1, sigma_2";
      case CaseId::F3:
        return "hereditarily finitely based, atbba <= W";
      case CaseId::F4:
        return "hereditarily finitely based, abbta <= W";
      case CaseId::F34:
        return "hereditarily finitely based, atbba <= W or abbta <= W";
      case CaseId::F5:
        return "{abtab, abtba, atbba} <= W <= {abtab, abtba}";
      case CaseId::F6:
        return "{abtab, abtba, abbta} <= W <= {abtab, abtba}";
      case CaseId::N1:
        return "xyyx is an isoterm, xtxyty is not";
      case CaseId::N2:
        return "yxxty and ytxxy are isoterms, xtxyty is not";
      case CaseId::N3:
        return "xyt1xt2y and xt1yt2xy are isoterms, xytxy and xytyx are not both";
      case CaseId::N4:
        return "xtxyty is an isoterm, xyt1xt2y and xt1yt2xy are not both, W is not below xxyy "
               "with both failing";
      case CaseId::N5:
        return "xtxyty, xytxy and xytyx are isoterms, xyxy is not";
      case CaseId::N6:
        return "xtxyty, xytxy, xytyx and xyxy are isoterms, xyyx is not";
      case CaseId::N7:
        return "xtxyty, xyyx are isoterms, xxyy is not";
      case CaseId::N8:
        return "xytxy is an isoterm, xytyx is not";
      case CaseId::none:
        break;
    }
    return "";
  }

  ScopeResult validate_scope(WordSet const& w) {
    ScopeResult r;
    if (w.empty()) {
      r.ok     = false;
      r.reason = "empty word set";
      return r;
    }
    for (auto const& u : w.words()) {
      auto p = structure_profile(u);
      if (u.empty()) {
        r.reason = "empty word";
      } else if (!p.is_k_limited(2)) {
        for (auto const& [x, n] : u.content()) {
          if (n > 2) {
            r.reason = "not 2-limited: " + x.display() + " occurs " + std::to_string(n) + " times";
            break;
          }
        }
      } else if (!p.is_block_n_simple(2)) {
        r.reason = "not block-2-simple: a block has " + std::to_string(p.block_width)
                   + " variables";
      } else {
        continue;
      }
      r.ok        = false;
      r.offending = u;
      return r;
    }
    return r;
  }

  Leaf decide(BatteryFlags const& f) {
    Leaf leaf;
    if (!f[XTXYTY]) {
      if (f[XYYX]) {
        leaf = {CaseId::N1, false, 'a'};
      } else if (f[YXXTY] && f[YTXXY]) {
        leaf = {CaseId::N2, false, 'b'};
      } else if (f[XYTXY] && f[XYTYX]) {
        if (!f[YXXTY]) {
          leaf = {CaseId::F5, !f[YTXXY], 'c'};
        } else {
          leaf = {CaseId::F6, false, 'c'};
        }
      } else if (f[XYT1XT2Y] && f[XT1YT2XY]) {
        leaf = {CaseId::N3, false, 'd'};
      } else {
        leaf = {CaseId::F34, false, 'e'};
      }
      return leaf;
    }
    if (!(f[XYT1XT2Y] && f[XT1YT2XY])) {
      if (!f[XYT1XT2Y] && !f[XT1YT2XY] && f[XXYY]) {
        leaf = {CaseId::F2, false, 'f'};
      } else {
        leaf = {CaseId::N4, false, 'f'};
      }
    } else if (!(f[XYTXY] && f[XYTYX])) {
      leaf = {CaseId::N3, false, 'g'};
    } else if (!f[XYXY]) {
      leaf = {CaseId::N5, false, 'g'};
    } else if (!f[XYYX]) {
      leaf = {CaseId::N6, false, 'g'};
    } else if (!f[XXYY]) {
      leaf = {CaseId::N7, false, 'g'};
    } else {
      leaf = {CaseId::F1, false, 'g'};
    }
    return leaf;
  }

  Verdict classify(WordSet const& w) {
    auto scope = validate_scope(w);
    if (!scope.ok) {
      Verdict v;
      v.input = w;
      v.scope = std::move(scope);
      return v;
    }
    IsotermEngine engine(w);
    return classify(engine);
  }

  Verdict classify(IsotermEngine& engine) {
    Verdict v;
    v.input = engine.words();
    v.scope = validate_scope(v.input);
    if (!v.scope.ok) {
      return v;
    }
    auto const& patterns = battery::all();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      v.trace.push_back(trace_entry(engine, patterns[i]));
      v.flags[i] = v.trace.back().isoterm;
    }
    auto leaf    = decide(v.flags);
    v.case_id    = leaf.case_id;
    v.both_duals = leaf.both_duals;
    v.branch     = leaf.branch;
    if (v.case_id == CaseId::F34) {
      bool f3 = satisfies_all(engine.monoid(), basis_F3()).holds;
      bool f4 = satisfies_all(engine.monoid(), basis_F4()).holds;
      if (!f3 && !f4) {
        throw CertificateError("branch (e) reached but S(W) satisfies neither hereditary basis for "
                               + v.input.str());
      }
      v.case_id    = f3 ? CaseId::F3 : CaseId::F4;
      v.both_duals = f3 && f4;
    }
    v.kind = kind_of(v.case_id);
    return v;
  }

  std::size_t default_n_max(CaseId c) {
    switch (c) {
      case CaseId::N1:
      case CaseId::N6:
      case CaseId::N7:
        return 3;
      default:
        return 2;
    }
  }

  Verdict certify(WordSet const& w, Verdict v, std::size_t n_max) {
    if (v.kind == VerdictKind::OutOfScope) {
      return v;
    }
    ReesMonoid   m(w);
    Certificate& c = v.certificate;
    c.attached     = true;
    auto add_basis = [&](char const* name, IdentitySet basis) {
      c.bases.push_back(check_basis(m, name, std::move(basis)));
    };
    auto interval = [&]() {
      bool holds = preceq(w, WordSet{"abtab", "abtba"});
      c.intervals.push_back({"W <= {abtab, abtba}", holds});
    };
    switch (v.case_id) {
      case CaseId::F1:
        add_basis("basis_F1", basis_F1());
        break;
      case CaseId::F2:
        add_basis("basis_F2", basis_F2());
        break;
      case CaseId::F3:
        add_basis("basis_F3", basis_F3());
        if (v.both_duals) {
          add_basis("basis_F4", basis_F4());
        }
        break;
      case CaseId::F4:
        add_basis("basis_F4", basis_F4());
        break;
      case CaseId::F5:
        add_basis("basis_F5", basis_F5());
        if (v.both_duals) {
          add_basis("basis_F6", basis_F6());
        }
        interval();
        break;
      case CaseId::F6:
        add_basis("basis_F6", basis_F6());
        interval();
        break;
      case CaseId::N3:
      case CaseId::N4:
        c.note = "no witness family is generated for this case";
        break;
      default:
        break;
    }
    c.family = family_of(v.case_id);
    if (!c.family.empty()) {
      std::size_t top = n_max == 0 ? default_n_max(v.case_id) : n_max;
      for (std::size_t n = 2; n <= top; ++n) {
        c.witnesses.push_back(check_witness(m, c.family, n));
      }
    }
    for (auto const& b : c.bases) {
      if (!b.holds) {
        throw CertificateError("S(" + w.str() + ") fails " + b.failed->str() + " from " + b.name);
      }
    }
    for (auto const& i : c.intervals) {
      if (!i.holds) {
        throw CertificateError("interval check failed for " + w.str() + ": " + i.description);
      }
    }
    for (auto const& x : c.witnesses) {
      if (!x.holds) {
        throw CertificateError("S(" + w.str() + ") fails witness " + x.identity.str());
      }
    }
    return v;
  }

  std::vector<StandaloneTest> standalone_nfb_tests(WordSet const& w, bool verify) {
    IsotermEngine               engine(w);
    std::vector<StandaloneTest> result;
    auto run = [&](std::string name, Word const& yes, Word const& no, CaseId c,
                   std::vector<std::size_t> levels) {
      StandaloneTest t;
      t.name = std::move(name);
      t.checks.push_back(trace_entry(engine, yes));
      t.checks.push_back(trace_entry(engine, no));
      t.fires = t.checks[0].isoterm && !t.checks[1].isoterm;
      if (t.fires && verify) {
        for (auto n : levels) {
          t.witnesses.push_back(check_witness(engine.monoid(), family_of(c), n));
        }
      }
      result.push_back(std::move(t));
    };
    run("xyyx", battery::xyyx(), battery::xtxyty(), CaseId::N1, {2, 3});
    run("xytxy", battery::xytxy(), battery::xytyx(), CaseId::N8, {2});
    return result;
  }

}  // namespace reesfb
