// Identities u = v between words.

#ifndef REESFB_IDENTITY_HPP_
#define REESFB_IDENTITY_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reesfb/word.hpp"

namespace reesfb {

  struct Identity {
    Word lhs;
    Word rhs;

    Identity() = default;
    Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {}

    // "lhs=rhs", both sides in word syntax.
    static Identity parse(std::string_view text);

    std::string str() const;

    bool is_trivial() const {
      return lhs == rhs;
    }
    // Every variable occurs equally often on both sides.
    bool is_balanced() const;
    // Variables of lhs then rhs, in order of first appearance.
    std::vector<Variable> variables() const;
    // Pairs {x, y} with lhs(x, y) != rhs(x, y).
    std::vector<std::pair<Variable, Variable>> unstable_pairs() const;

    Identity reversed() const;
    Identity swapped() const {
      return Identity(rhs, lhs);
    }
    // Canonical renaming through lhs then rhs; the smaller of the two
    // orientations.  Equal iff the identities agree up to renaming and
    // swapping sides.
    Identity normalized() const;

    friend bool operator==(Identity const&, Identity const&) = default;
    friend auto operator<=>(Identity const& a, Identity const& b) {
      if (auto c = a.lhs <=> b.lhs; c != 0) {
        return c;
      }
      return a.rhs <=> b.rhs;
    }
  };

  using IdentitySet = std::vector<Identity>;

  std::string to_string(IdentitySet const& s);

}  // namespace reesfb

#endif  // REESFB_IDENTITY_HPP_
