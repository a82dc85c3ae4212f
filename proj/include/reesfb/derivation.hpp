// Deletion closure, the filtered sets Sigma_k, one-step application of
// identities and bounded derivation search.

#ifndef REESFB_DERIVATION_HPP_
#define REESFB_DERIVATION_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "reesfb/identity.hpp"
#include "reesfb/matcher.hpp"

namespace reesfb {

  // D_X(u) = D_X(v) for every set X of variables; trivial identities dropped,
  // the rest normalized and deduplicated.
  IdentitySet delta_closure(IdentitySet const& delta);

  // Some distinct x, y, a1 .. ak of u with u(x, y, a1, .., ak) = xy a1^2 .. ak^2 xy.
  bool deletes_to_square_pattern(Word const& u, std::size_t k);

  // Members of the deletion closure of {w_n = w'_n : 2 <= n <= n_cap} whose
  // sides do not delete to xy a1^2 .. ak^2 xy.
  IdentitySet sigma_k(std::size_t k, std::size_t n_cap);

  struct Application {
    Word             result;
    std::size_t      position = 0;  // start of the rewritten factor
    std::size_t      length   = 0;  // its length
    WordSubstitution theta;
    bool             forward = true;  // lhs -> rhs
  };

  // Every A θ(rhs) B with u = A θ(lhs) B (and lhs, rhs swapped unless
  // forward_only).  Variables missing from the matched side map to the empty word.
  std::vector<Application> one_step_applications(Word const&     u,
                                                 Identity const& id,
                                                 bool            forward_only = false);
  std::set<Word>           one_step_apply(Word const& u, Identity const& id, bool forward_only = false);

  // No single application of an identity of sigma changes u.
  bool is_isoterm_wrt(Word const& u, IdentitySet const& sigma);

  struct DerivationStep {
    Word        from;
    Word        to;
    Identity    identity;
    Application application;
  };

  struct Derivation {
    std::vector<DerivationStep> steps;

    std::size_t size() const {
      return steps.size();
    }
  };

  // Shortest derivation u -> v using at most `depth` steps, if any.
  std::optional<Derivation> derive_bounded(Word const&        u,
                                           Word const&        v,
                                           IdentitySet const& sigma,
                                           std::size_t        depth);

}  // namespace reesfb

#endif  // REESFB_DERIVATION_HPP_
