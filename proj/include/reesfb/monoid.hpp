// The Rees quotient monoid S(W): the free monoid modulo the ideal of words
// that are not factors of W.

#ifndef REESFB_MONOID_HPP_
#define REESFB_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reesfb/word.hpp"

namespace reesfb {

  class MonoidError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class ReesMonoid {
   public:
    using element_type = std::uint32_t;

    static constexpr element_type zero = 0;
    static constexpr element_type one  = 1;
    // Cayley tables are dense; beyond this the table no longer fits.
    static constexpr std::size_t max_size = 1 << 14;

    ReesMonoid() = default;
    explicit ReesMonoid(WordSet const& w);

    WordSet const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    element_type multiply(element_type a, element_type b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _elements.size() + b];
    }
    // Row-major |M| x |M| Cayley table.
    std::vector<element_type> const& table() const noexcept {
      return _table;
    }
    // Element represented by a word: 1 for the empty word, 0 for non-factors.
    element_type find(Word const& w) const;
    bool is_factor(Word const& w) const {
      return w.empty() || find(w) != zero;
    }
    // Word of a nonzero element; the empty word for both 0 and 1.
    Word const& word(element_type e) const {
      return _elements[e];
    }
    std::size_t length(element_type e) const {
      return _elements[e].size();
    }
    std::string element_name(element_type e) const;
    // Letters occurring in W in sorted order.
    std::vector<Variable> const& alphabet() const noexcept {
      return _alphabet;
    }
    // e.a for a letter of the alphabet, 0 when a is not a letter of W.
    element_type step(element_type e, Variable a) const;
    // All b with a.b != 0, ascending; 1 is always among them for a != 0.
    std::span<element_type const> right_extensions(element_type a) const {
      return {_ext.data() + _ext_start[a], _ext.data() + _ext_start[a + 1]};
    }

   private:
    WordSet                                    _words;
    std::vector<Word>                          _elements;
    std::vector<element_type>                  _table;
    std::vector<Variable>                      _alphabet;
    std::vector<element_type>                  _steps;  // |M| x |alphabet|
    std::vector<element_type>                  _ext;
    std::vector<std::size_t>                   _ext_start;
    std::unordered_map<Word, element_type>     _index;
  };

}  // namespace reesfb

#endif  // REESFB_MONOID_HPP_
