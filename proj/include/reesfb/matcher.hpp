// Matching a pattern word against a target word with possibly-empty images.

#ifndef REESFB_MATCHER_HPP_
#define REESFB_MATCHER_HPP_

#include <functional>
#include <map>
#include <vector>

#include "reesfb/word.hpp"

namespace reesfb {

  using WordSubstitution = std::map<Variable, Word>;

  // Calls f(images) for every substitution θ with θ(pattern) = target, where
  // images[i] is the image of pattern.variables()[i].  Images may be empty.
  // Matches are visited with shorter images for earlier variables first.
  // f returns false to stop; the result is false iff f stopped the search.
  bool for_each_match(Word const&                                        pattern,
                      Word const&                                        target,
                      std::function<bool(std::vector<Word> const&)> const& f);

  std::vector<WordSubstitution> all_matches(Word const& pattern, Word const& target);

  // θ(u); variables outside the domain of θ are left in place.
  Word substitute(Word const& u, WordSubstitution const& theta);

}  // namespace reesfb

#endif  // REESFB_MATCHER_HPP_
