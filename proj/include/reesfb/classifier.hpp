// Finite basis classification of S(W) for sets of 2-limited block-2-simple
// words, with certificates, and the two NFB tests valid for any word set.

#ifndef REESFB_CLASSIFIER_HPP_
#define REESFB_CLASSIFIER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reesfb/identity.hpp"
#include "reesfb/isoterm.hpp"

namespace reesfb {

  class CertificateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class VerdictKind { FB, NFB, OutOfScope };

  // F1 ~{aabb,abab,abba}; F2 ~{aabb}; F3/F4 hereditarily FB above atbba/abbta;
  // F5/F6 intervals over atbba/abbta; N1..N7 NFB cases; N8 the standalone
  // xytxy test.  F34 is the undecided F3-or-F4 leaf of the bare tree.
  enum class CaseId { none, F1, F2, F3, F4, F5, F6, F34, N1, N2, N3, N4, N5, N6, N7, N8 };

  char const* to_string(VerdictKind k);
  char const* to_string(CaseId c);
  std::string describe(CaseId c);

  struct ScopeResult {
    bool                ok = true;
    std::string         reason;
    std::optional<Word> offending;
  };

  ScopeResult validate_scope(WordSet const& w);

  // Isoterm flags of the ten battery words, in battery::all() order.
  using BatteryFlags = std::array<bool, 10>;

  struct Leaf {
    CaseId      case_id    = CaseId::none;
    bool        both_duals = false;  // F5 and F6 both apply
    char        branch     = '?';    // a..g
  };

  // The decision tree on flags alone; F3/F4 comes back as F34.
  Leaf decide(BatteryFlags const& flags);

  struct TraceEntry {
    std::string             pattern;
    bool                    isoterm = false;
    std::optional<bool>     fast;
    PartnerMode             mode = PartnerMode::balanced;
    std::optional<Identity> partner;
  };

  struct BasisCheck {
    std::string             name;
    IdentitySet             basis;
    bool                    holds = false;
    std::optional<Identity> failed;
  };

  struct IntervalCheck {
    std::string description;
    bool        holds = false;
  };

  struct WitnessCheck {
    std::string family;
    std::size_t n = 0;
    Identity    identity;
    bool        holds   = false;
    double      seconds = 0;
  };

  struct Certificate {
    bool                       attached = false;
    std::vector<BasisCheck>    bases;
    std::vector<IntervalCheck> intervals;
    std::string                family;  // NFB witness family, if any
    std::vector<WitnessCheck>  witnesses;
    std::string                note;
  };

  struct Verdict {
    WordSet                 input;
    VerdictKind             kind    = VerdictKind::OutOfScope;
    CaseId                  case_id = CaseId::none;
    bool                    both_duals = false;
    char                    branch     = '?';
    ScopeResult             scope;
    std::vector<TraceEntry> trace;
    BatteryFlags            flags{};
    Certificate             certificate;
  };

  // Runs the tree; F3/F4 is settled by which hereditary basis S(W) satisfies.
  Verdict classify(WordSet const& w);
  Verdict classify(IsotermEngine& engine);

  // Default witness levels: 3 for families in at most 4 variables, else 2.
  std::size_t default_n_max(CaseId c);
  // Attaches and checks the certificate; n_max = 0 picks the defaults.
  // Throws CertificateError when a check fails.
  Verdict certify(WordSet const& w, Verdict v, std::size_t n_max = 0);

  struct StandaloneTest {
    std::string               name;
    std::vector<TraceEntry>   checks;
    bool                      fires = false;
    std::vector<WitnessCheck> witnesses;
  };

  // The xyyx/xtxyty test and the xytxy/xytyx test; witness levels are checked
  // when a test fires and verify is set.
  std::vector<StandaloneTest> standalone_nfb_tests(WordSet const& w, bool verify = true);

}  // namespace reesfb

#endif  // REESFB_CLASSIFIER_HPP_
