// Evaluating words in S(W) and deciding whether S(W) satisfies identities.

#ifndef REESFB_SATISFACTION_HPP_
#define REESFB_SATISFACTION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reesfb/identity.hpp"
#include "reesfb/monoid.hpp"

namespace reesfb {

  using Element = ReesMonoid::element_type;
  // Variable -> element; listed in the identity's variable order.
  using Assignment = std::vector<std::pair<Variable, Element>>;

  // Left-to-right product of the images; the empty word gives 1.
  Element evaluate(ReesMonoid const& m, Word const& u, Assignment const& theta);

  enum class SatisfactionMethod {
    // exhaustive when |M|^k is small, instances otherwise
    automatic,
    // every assignment of the k variables, lexicographic in the variable
    // order of the identity and element index order
    exhaustive,
    // only assignments under which one side is a nonzero element
    instances
  };

  char const* to_string(SatisfactionMethod m);

  struct SatisfactionResult {
    bool               holds  = true;
    SatisfactionMethod method = SatisfactionMethod::exhaustive;
    Assignment         witness;
    Element            lhs_value = ReesMonoid::one;
    Element            rhs_value = ReesMonoid::one;

    explicit operator bool() const {
      return holds;
    }
  };

  SatisfactionResult satisfies(ReesMonoid const& m,
                               Identity const&   id,
                               SatisfactionMethod method = SatisfactionMethod::automatic);

  struct SatisfiesAllResult {
    bool                    holds = true;
    std::optional<Identity> failed;
    SatisfactionResult      detail;

    explicit operator bool() const {
      return holds;
    }
  };

  // Stops at the first identity that fails.
  SatisfiesAllResult satisfies_all(ReesMonoid const&  m,
                                   IdentitySet const& ids,
                                   SatisfactionMethod method = SatisfactionMethod::automatic);

  // Assignments θ of u.variables() to nonzero elements with θ(u) != 0, in
  // lexicographic order of the image vectors.  f returns false to stop.
  // With `nonempty`, no variable is sent to 1.
  void for_each_instance(ReesMonoid const&                                        m,
                         Word const&                                              u,
                         std::function<bool(std::span<Element const>, Element)> const& f,
                         bool nonempty = false);

  struct Instance {
    std::vector<Element> images;
    Element              value = ReesMonoid::one;

    friend bool operator==(Instance const&, Instance const&) = default;
    friend auto operator<=>(Instance const&, Instance const&) = default;
  };

  std::vector<Instance> instances(ReesMonoid const& m, Word const& u);

  std::string to_string(ReesMonoid const& m, Assignment const& theta);

}  // namespace reesfb

#endif  // REESFB_SATISFACTION_HPP_
