#include "reesfb/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace reesfb {

  Json to_json(Identity const& id) {
    return id.str();
  }

  Json to_json(IdentitySet const& ids) {
    Json a = Json::array();
    for (auto const& id : ids) {
      a.push_back(id.str());
    }
    return a;
  }

  Json to_json(WordSet const& w) {
    return to_json(w.words());
  }

  Json to_json(std::vector<Word> const& words) {
    Json a = Json::array();
    for (auto const& u : words) {
      a.push_back(u.str());
    }
    return a;
  }

  namespace {
    Json optional_identity(std::optional<Identity> const& id) {
      return id ? Json(id->str()) : Json(nullptr);
    }

    Json trace_json(TraceEntry const& t) {
      Json j;
      j["pattern"] = t.pattern;
      j["isoterm"] = t.isoterm;
      j["fast"]    = t.fast ? Json(*t.fast) : Json(nullptr);
      j["mode"]    = to_string(t.mode);
      j["partner"] = optional_identity(t.partner);
      return j;
    }

    Json witness_json(WitnessCheck const& w) {
      Json j;
      j["family"]   = w.family;
      j["n"]        = w.n;
      j["identity"] = w.identity.str();
      j["holds"]    = w.holds;
      return j;
    }

  }  // namespace

  Json to_json(IsotermReport const& r) {
    Json j;
    j["word"]                = r.word.str();
    j["is_isoterm"]          = r.is_isoterm;
    j["method"]              = r.method;
    j["mode"]                = to_string(r.mode);
    j["partner"]             = optional_identity(r.partner);
    j["candidates_examined"] = r.candidates_examined;
    return j;
  }

  Json to_json(Verdict const& v) {
    Json j;
    j["input"] = to_json(v.input);
    j["scope"] = v.scope.ok ? "ok" : "out_of_scope";
    if (!v.scope.ok) {
      j["reason"]    = v.scope.reason;
      j["offending"] = v.scope.offending ? Json(v.scope.offending->str()) : Json(nullptr);
      return j;
    }
    j["verdict"]    = to_string(v.kind);
    j["case"]       = to_string(v.case_id);
    j["both_duals"] = v.both_duals;
    j["branch"]     = std::string(1, v.branch);
    Json trace      = Json::array();
    for (auto const& t : v.trace) {
      trace.push_back(trace_json(t));
    }
    j["trace"] = std::move(trace);

    auto const& c = v.certificate;
    Json        cert;
    cert["attached"] = c.attached;
    Json bases       = Json::array();
    for (auto const& b : c.bases) {
      Json bj;
      bj["name"]     = b.name;
      bj["basis"]    = to_json(b.basis);
      bj["holds"]    = b.holds;
      bj["failed"]   = optional_identity(b.failed);
      bases.push_back(std::move(bj));
    }
    cert["bases"]  = std::move(bases);
    Json intervals = Json::array();
    for (auto const& i : c.intervals) {
      Json ij;
      ij["description"] = i.description;
      ij["holds"]       = i.holds;
      intervals.push_back(std::move(ij));
    }
    cert["intervals"] = std::move(intervals);
    cert["family"]    = c.family.empty() ? Json(nullptr) : Json(c.family);
    Json witnesses    = Json::array();
    for (auto const& w : c.witnesses) {
      witnesses.push_back(witness_json(w));
    }
    cert["witnesses"]  = std::move(witnesses);
    cert["note"]       = c.note;
    j["certificate"]   = std::move(cert);
    return j;
  }

  Json to_json(std::vector<StandaloneTest> const& tests) {
    Json a = Json::array();
    for (auto const& t : tests) {
      Json j;
      j["test"]   = t.name;
      Json checks = Json::array();
      for (auto const& c : t.checks) {
        checks.push_back(trace_json(c));
      }
      j["checks"]    = std::move(checks);
      j["fires"]     = t.fires;
      Json witnesses = Json::array();
      for (auto const& w : t.witnesses) {
        witnesses.push_back(witness_json(w));
      }
      j["witnesses"] = std::move(witnesses);
      a.push_back(std::move(j));
    }
    return a;
  }

  Json to_json(ReesMonoid const& m) {
    Json j;
    j["words"] = to_json(m.words());
    j["size"]  = m.size();
    Json elements = Json::array();
    for (std::size_t e = 0; e < m.size(); ++e) {
      elements.push_back(m.element_name(static_cast<Element>(e)));
    }
    j["elements"] = std::move(elements);
    Json table    = Json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < m.size(); ++b) {
        row.push_back(m.multiply(static_cast<Element>(a), static_cast<Element>(b)));
      }
      table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
  }

  Json to_json(ReesMonoid const& m, Identity const& id, SatisfactionResult const& r) {
    Json j;
    j["words"]    = to_json(m.words());
    j["identity"] = id.str();
    j["holds"]    = r.holds;
    j["method"]   = to_string(r.method);
    if (!r.holds) {
      Json w = Json::object();
      for (auto const& [x, e] : r.witness) {
        w[x.display()] = m.element_name(e);
      }
      j["witness"] = std::move(w);
      j["lhs"]     = m.element_name(r.lhs_value);
      j["rhs"]     = m.element_name(r.rhs_value);
    }
    return j;
  }

  Json to_json(FamilyOutput const& f) {
    Json j;
    j["family"] = f.name;
    j["n"]      = f.n;
    if (!f.identities.empty()) {
      j["identities"] = to_json(f.identities);
    }
    if (!f.words.empty()) {
      j["words"] = to_json(f.words);
    }
    return j;
  }

  Json to_json(Decomposition const& d) {
    auto const& e = d.eligibility;
    Json        j;
    j["source"]   = d.source.str();
    j["eligible"] = e.eligible;
    j["case"]     = to_string(e.tag);
    Json T = Json::array(), A = Json::array(), B = Json::array();
    for (auto x : e.T) {
      T.push_back(x.display());
    }
    for (auto x : e.A) {
      A.push_back(x.display());
    }
    for (auto const& [x, y] : e.B) {
      B.push_back(Json::array({x.display(), y.display()}));
    }
    j["T"]      = std::move(T);
    j["A"]      = std::move(A);
    j["B"]      = std::move(B);
    j["result"] = to_json(d.result);
    return j;
  }

  Json to_json(EquivalenceCheck const& c) {
    Json j;
    j["bound"]            = c.bound;
    j["status"]           = c.passed() ? "verified at bound" : "disagreement";
    j["preceq_forward"]   = c.preceq_forward;
    j["preceq_backward"]  = c.preceq_backward;
    j["isot2_agree"]      = c.isot2_agree;
    j["isot2_difference"] = c.isot2_difference ? Json(c.isot2_difference->str()) : Json(nullptr);
    j["identities_agree"] = c.identities.agree;
    j["words_compared"]   = c.identities.words;
    j["counterexample"]   = optional_identity(c.identities.counterexample);
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string render(IsotermReport const& r) {
    std::ostringstream out;
    out << r.word.str() << ": " << (r.is_isoterm ? "isoterm" : "not an isoterm");
    if (r.partner) {
      out << " (partner " << r.partner->str() << ")";
    }
    out << "\n  mode " << to_string(r.mode) << ", " << r.candidates_examined
        << " candidates checked\n";
    if (r.mode == PartnerMode::bounded && r.is_isoterm) {
      out << "  note: bounded search, partners longer than |u|+1 not examined\n";
    }
    return out.str();
  }

  std::string render(Verdict const& v) {
    std::ostringstream out;
    out << "input: " << v.input.str() << "\n";
    if (!v.scope.ok) {
      out << "out of scope: " << v.scope.reason;
      if (v.scope.offending) {
        out << " (" << v.scope.offending->str() << ")";
      }
      out << "\n";
      return out.str();
    }
    out << "verdict: " << to_string(v.kind) << " (" << to_string(v.case_id)
        << (v.both_duals ? ", both duals" : "") << ", branch " << v.branch << ")\n";
    out << "  " << describe(v.case_id) << "\n";
    out << "trace:\n";
    for (auto const& t : v.trace) {
      out << "  " << std::left << std::setw(10) << t.pattern << (t.isoterm ? "isoterm" : "-");
      if (t.partner) {
        out << "  " << t.partner->str();
      }
      out << "\n";
    }
    auto const& c = v.certificate;
    if (c.attached) {
      out << "certificate:\n";
      for (auto const& b : c.bases) {
        out << "  basis " << b.name << " (" << b.basis.size() << " identities): "
            << (b.holds ? "satisfied" : "FAILED") << "\n";
      }
      for (auto const& i : c.intervals) {
        out << "  " << i.description << ": " << (i.holds ? "yes" : "no") << "\n";
      }
      for (auto const& w : c.witnesses) {
        out << "  " << w.family << " n=" << w.n << ": " << w.identity.str() << " "
            << (w.holds ? "holds" : "FAILS") << "\n";
      }
      if (!c.note.empty()) {
        out << "  " << c.note << "\n";
      }
    }
    return out.str();
  }

  std::string render(std::vector<StandaloneTest> const& tests) {
    std::ostringstream out;
    for (auto const& t : tests) {
      out << t.name << ": " << (t.fires ? "fires (NFB)" : "does not fire") << "\n";
      for (auto const& c : t.checks) {
        out << "  " << c.pattern << " " << (c.isoterm ? "isoterm" : "not an isoterm") << "\n";
      }
      for (auto const& w : t.witnesses) {
        out << "  n=" << w.n << " " << w.identity.str() << " " << (w.holds ? "holds" : "FAILS")
            << "\n";
      }
    }
    return out.str();
  }

  std::string render(ReesMonoid const& m) {
    std::ostringstream out;
    out << "S(" << m.words().str() << "), " << m.size() << " elements\n";
    std::size_t width = 1;
    for (std::size_t e = 0; e < m.size(); ++e) {
      auto name = m.element_name(static_cast<Element>(e));
      width     = std::max(width, name.size());
      out << "  " << e << ": " << name << "\n";
    }
    if (m.size() > 64) {
      out << "(table omitted, use --json)\n";
      return out.str();
    }
    width = std::to_string(m.size()).size();
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = 0; b < m.size(); ++b) {
        out << (b ? " " : "") << std::setw(static_cast<int>(width))
            << m.multiply(static_cast<Element>(a), static_cast<Element>(b));
      }
      out << "\n";
    }
    return out.str();
  }

  std::string render(ReesMonoid const& m, Identity const& id, SatisfactionResult const& r) {
    std::ostringstream out;
    out << "S(" << m.words().str() << ") " << (r.holds ? "satisfies " : "fails ") << id.str()
        << " [" << to_string(r.method) << "]\n";
    if (!r.holds) {
      out << "  witness " << to_string(m, r.witness) << ": " << m.element_name(r.lhs_value)
          << " vs " << m.element_name(r.rhs_value) << "\n";
    }
    return out.str();
  }

  std::string render(FamilyOutput const& f) {
    std::ostringstream out;
    for (auto const& id : f.identities) {
      out << id.str() << "\n";
    }
    for (auto const& w : f.words) {
      out << w.str() << "\n";
    }
    return out.str();
  }

  std::string render(Decomposition const& d) {
    std::ostringstream out;
    auto const&        e = d.eligibility;
    out << d.source.str() << ": case " << to_string(e.tag) << "\n  T = {";
    for (std::size_t i = 0; i < e.T.size(); ++i) {
      out << (i ? "," : "") << e.T[i].display();
    }
    out << "}, A = {";
    for (std::size_t i = 0; i < e.A.size(); ++i) {
      out << (i ? "," : "") << e.A[i].display();
    }
    out << "}, B = {";
    for (std::size_t i = 0; i < e.B.size(); ++i) {
      out << (i ? "," : "") << "{" << e.B[i].first.display() << "," << e.B[i].second.display()
          << "}";
    }
    out << "}\n  result: " << d.result.str() << "\n";
    return out.str();
  }

  std::string render(EquivalenceCheck const& c) {
    std::ostringstream out;
    out << (c.passed() ? "verified at bound " : "disagreement at bound ") << c.bound
        << " (bounded check, not a proof)\n";
    out << "  preceq both ways: " << (c.preceq_forward ? "yes" : "no") << "/"
        << (c.preceq_backward ? "yes" : "no") << "\n";
    out << "  isot2 catalog: " << (c.isot2_agree ? "agrees" : "differs");
    if (c.isot2_difference) {
      out << " at " << c.isot2_difference->str();
    }
    out << "\n  identities: " << c.identities.words << " words, "
        << (c.identities.agree ? "same classes" : "classes differ");
    if (c.identities.counterexample) {
      out << ", e.g. " << c.identities.counterexample->str();
    }
    out << "\n";
    return out.str();
  }

}  // namespace reesfb
