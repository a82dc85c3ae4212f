#include "reesfb/monoid.hpp"

#include <algorithm>

namespace reesfb {

  ReesMonoid::ReesMonoid(WordSet const& w) : _words(w) {
    if (w.empty()) {
      throw MonoidError("S(W) needs a nonempty word set");
    }
    for (auto const& u : w.words()) {
      if (u.empty()) {
        throw MonoidError("S(W) needs nonempty member words");
      }
    }
    auto const& closure = w.closure();  // starts with the empty word
    if (closure.size() + 1 > max_size) {
      throw MonoidError("S(W) has " + std::to_string(closure.size() + 1)
                        + " elements, more than the supported "
                        + std::to_string(max_size));
    }
    _elements.reserve(closure.size() + 1);
    _elements.emplace_back();
    _elements.insert(_elements.end(), closure.begin(), closure.end());
    std::size_t const n = _elements.size();
    for (element_type e = 2; e < n; ++e) {
      _index.emplace(_elements[e], e);
    }

    VariableSet letters;
    for (auto const& u : w.words()) {
      letters.insert(u.begin(), u.end());
    }
    _alphabet.assign(letters.begin(), letters.end());
    std::size_t const k = _alphabet.size();

    // Right multiplication by one letter.
    _steps.assign(n * k, zero);
    for (element_type e = 1; e < n; ++e) {
      for (std::size_t i = 0; i < k; ++i) {
        auto it = _index.find(_elements[e] + Word({_alphabet[i]}));
        _steps[e * k + i] = it == _index.end() ? zero : it->second;
      }
    }
    _table.assign(n * n, zero);
    for (element_type a = 1; a < n; ++a) {
      _table[a * n + one] = a;
      _table[one * n + a] = a;
    }
    // Every nonzero product of two nonempty factors is a factor c = a.b, so
    // walking the splits of each c fills the rest of the table.
    for (element_type c = 2; c < n; ++c) {
      auto const& w = _elements[c];
      for (std::size_t i = 1; i < w.size(); ++i) {
        auto a = _index.at(w.factor(0, i));
        auto b = _index.at(w.factor(i, w.size() - i));
        _table[a * n + b] = c;
      }
    }
    _ext_start.assign(n + 1, 0);
    for (element_type a = 0; a < n; ++a) {
      _ext_start[a] = _ext.size();
      for (element_type b = 1; b < n; ++b) {
        if (_table[a * n + b] != zero) {
          _ext.push_back(b);
        }
      }
    }
    _ext_start[n] = _ext.size();
  }

  ReesMonoid::element_type ReesMonoid::find(Word const& w) const {
    if (w.empty()) {
      return one;
    }
    auto it = _index.find(w);
    return it == _index.end() ? zero : it->second;
  }

  std::string ReesMonoid::element_name(element_type e) const {
    if (e == zero) {
      return "0";
    }
    if (e == one) {
      return "1";
    }
    return _elements[e].str();
  }

  ReesMonoid::element_type ReesMonoid::step(element_type e, Variable a) const {
    auto it = std::lower_bound(_alphabet.begin(), _alphabet.end(), a);
    if (it == _alphabet.end() || *it != a) {
      return zero;
    }
    return _steps[e * _alphabet.size() + static_cast<std::size_t>(it - _alphabet.begin())];
  }

}  // namespace reesfb
