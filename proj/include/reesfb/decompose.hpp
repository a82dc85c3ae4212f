// Splitting a word into an equationally equivalent set of words with at most
// two non-linear variables, and bounded checks of such equivalences.

#ifndef REESFB_DECOMPOSE_HPP_
#define REESFB_DECOMPOSE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reesfb/identity.hpp"
#include "reesfb/isoterm.hpp"

namespace reesfb {

  class IneligibleError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Which argument licenses the split.  conditions_only: the two block
  // conditions hold but none of the named cases was recognised.
  enum class DecompositionCase {
    none,
    block_1_simple,
    hereditary_fb,
    at_least_3_occurring,  // not below xyt1xt2y, xt1yt2xy; non-linear letters occur >= 3 times
    block_2_simple_no_sigma,  // block-2-simple, not below xyt1xt2y, xt1yt2xy
    block_2_simple_no_xtxyty,  // block-2-simple, not below xtxyty
    conditions_only
  };

  char const* to_string(DecompositionCase c);

  struct Eligibility {
    bool                                       eligible = false;
    std::string                                reason;  // why not, when ineligible
    DecompositionCase                          tag = DecompositionCase::none;
    std::vector<Variable>                      T;  // linear variables
    std::vector<Variable>                      A;  // next to a linear variable
    std::vector<std::pair<Variable, Variable>> B;  // adjacent somewhere
  };

  Eligibility delblock_eligibility(Word const& u);

  struct Decomposition {
    Word        source;
    Eligibility eligibility;
    WordSet     result;
  };

  // Raw projections by default; `canonical` renames the result set by first
  // appearance (one renaming for the whole set).  Throws IneligibleError
  // naming the failed hypothesis.
  Decomposition decompose(Word const& u, bool canonical = false);

  struct Agreement {
    bool                    agree = true;
    std::optional<Identity> counterexample;  // holds in exactly one of the two
    std::size_t             words = 0;       // words compared
  };

  // S(a) and S(b) satisfy the same identities u = v with |u|, |v| <= bound and
  // at most max_nonlinear non-linear variables.  Exact for that range.
  Agreement bounded_identity_agreement(WordSet const& a,
                                       WordSet const& b,
                                       std::size_t    bound,
                                       std::size_t    max_nonlinear = 2);

  struct EquivalenceCheck {
    bool        preceq_forward  = false;  // {u} <= result
    bool        preceq_backward = false;  // result <= {u}
    bool        isot2_agree     = false;
    std::optional<Word> isot2_difference;
    Agreement   identities;
    std::size_t bound = 0;

    bool passed() const {
      return preceq_forward && preceq_backward && isot2_agree && identities.agree;
    }
  };

  // A bounded, necessary check of {u} ~ D.result, not a proof.  Catalog words
  // and identities are both limited to length `bound`.
  EquivalenceCheck check_equivalence_bounded(Word const& u, Decomposition const& d, std::size_t bound);

}  // namespace reesfb

#endif  // REESFB_DECOMPOSE_HPP_
