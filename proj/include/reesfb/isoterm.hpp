// Isoterms for S(W), the quasi-order W <= W' and Isot2 representatives.

#ifndef REESFB_ISOTERM_HPP_
#define REESFB_ISOTERM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesfb/identity.hpp"
#include "reesfb/monoid.hpp"
#include "reesfb/satisfaction.hpp"

namespace reesfb {

  // How partners of a word are searched.
  enum class PartnerMode {
    // rearrangements of the word's letters; used when xtx is an isoterm
    balanced,
    // words over the same variables of length at most |u| + 1
    bounded
  };

  char const* to_string(PartnerMode m);

  struct IsotermReport {
    Word                    word;
    bool                    is_isoterm = true;
    std::string             method     = "oracle";
    PartnerMode             mode       = PartnerMode::balanced;
    std::optional<Identity> partner;
    std::size_t             candidates_examined = 0;
  };

  // Named test words used by the classifier.
  namespace battery {
    Word const& xtxyty();
    Word const& xyyx();
    Word const& yxxty();
    Word const& ytxxy();
    Word const& xytxy();
    Word const& xytyx();
    Word const& xyt1xt2y();
    Word const& xt1yt2xy();
    Word const& xxyy();
    Word const& xyxy();
    std::vector<Word> const& all();
    // Display names, e.g. "xyt1xt2y"; xtxyty keeps its short name.
    std::string name(Word const& p);
  }  // namespace battery

  // Isoterm queries against one S(W), with cached verdicts.
  class IsotermEngine {
   public:
    explicit IsotermEngine(WordSet w);

    WordSet const& words() const noexcept {
      return _words;
    }
    ReesMonoid const& monoid() const noexcept {
      return _monoid;
    }

    IsotermReport const& report(Word const& u);
    bool is_isoterm(Word const& u) {
      return report(u).is_isoterm;
    }
    bool xtx_is_isoterm();
    bool xx_is_isoterm();
    // balanced when xtx is an isoterm and every identity u = v must be
    // balanced (see the .cpp); bounded otherwise
    PartnerMode mode_for(Word const& u);

    // Lexicographically least v != u (letters ranked by first appearance in u)
    // with S(W) |= u = v among words of length <= max_length, searched in the
    // given mode.  `examined` counts the candidates that reached a full check.
    std::optional<Word> least_partner(Word const& u,
                                      PartnerMode mode,
                                      std::size_t max_length,
                                      std::size_t* examined = nullptr);

    // Structural shortcut for battery patterns; nullopt when it does not apply.
    std::optional<bool> is_isoterm_fast(Word const& p);

   private:
    WordSet                       _words;
    ReesMonoid                    _monoid;
    std::map<Word, IsotermReport> _cache;
    std::optional<bool>           _xtx;
    std::optional<bool>           _xx;
  };

  // The raw partner candidates of u: all other rearrangements of u in balanced
  // mode, otherwise all words v != u over con(u) plus at most one fresh
  // linear variable with |v| <= |u| + 1.
  std::vector<Word> candidate_partners(Word const& u, WordSet const& w);

  IsotermReport       is_isoterm(Word const& u, WordSet const& w);
  std::optional<bool> is_isoterm_fast(Word const& p, WordSet const& w);

  // Every word of w2 is an isoterm for S(w).
  bool preceq(WordSet const& w, WordSet const& w2);
  bool equiv(WordSet const& w, WordSet const& w2);
  bool below_basis(WordSet const& w, IdentitySet const& sigma);

  struct Isot2Bounds {
    std::size_t max_occ        = 2;
    bool        allow_end_gaps = true;
  };

  // Canonical words over at most two non-linear variables, each occurring at
  // most max_occ times, with at most one linear variable in each gap.
  std::vector<Word> isot2_catalog(Isot2Bounds const& bounds);
  // Catalog members that are isoterms for S(w).
  std::vector<Word> isot2(WordSet const& w, Isot2Bounds const& bounds);
  std::vector<Word> isot2(IsotermEngine& engine, Isot2Bounds const& bounds);
  // max_occ from the largest occurrence count in w, at least 2.
  Isot2Bounds default_isot2_bounds(WordSet const& w);

}  // namespace reesfb

#endif  // REESFB_ISOTERM_HPP_
