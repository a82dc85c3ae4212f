#include "reesfb/matcher.hpp"

#include <algorithm>

namespace reesfb {

  namespace {
    struct Span {
      std::size_t start = 0;
      std::size_t len   = 0;
    };

    class Matcher {
     public:
      Matcher(Word const& pattern, Word const& target,
              std::function<bool(std::vector<Word> const&)> const& f)
          : _target(target), _f(f), _vars(pattern.variables()) {
        for (auto x : pattern) {
          _codes.push_back(static_cast<std::size_t>(
              std::find(_vars.begin(), _vars.end(), x) - _vars.begin()));
        }
        _spans.resize(_vars.size());
        _bound.assign(_vars.size(), false);
      }

      bool run() {
        return visit(0, 0);
      }

     private:
      // Letters the rest of the pattern needs at least, given bound images.
      std::size_t committed(std::size_t i) const {
        std::size_t total = 0;
        for (; i < _codes.size(); ++i) {
          if (_bound[_codes[i]]) {
            total += _spans[_codes[i]].len;
          }
        }
        return total;
      }

      bool same(Span s, std::size_t at) const {
        for (std::size_t j = 0; j < s.len; ++j) {
          if (_target[s.start + j] != _target[at + j]) {
            return false;
          }
        }
        return true;
      }

      bool visit(std::size_t i, std::size_t at) {
        if (i == _codes.size()) {
          if (at != _target.size()) {
            return true;
          }
          std::vector<Word> images;
          for (auto s : _spans) {
            images.push_back(_target.factor(s.start, s.len));
          }
          return _f(images);
        }
        std::size_t v = _codes[i];
        if (_bound[v]) {
          Span s = _spans[v];
          if (at + s.len > _target.size() || !same(s, at)) {
            return true;
          }
          return visit(i + 1, at + s.len);
        }
        std::size_t room = _target.size() - at;
        std::size_t need = committed(i + 1);
        if (need > room) {
          return true;
        }
        _bound[v] = true;
        for (std::size_t len = 0; len + need <= room; ++len) {
          _spans[v] = {at, len};
          // Later occurrences of v also consume len letters.
          if (!visit(i + 1, at + len)) {
            _bound[v] = false;
            return false;
          }
        }
        _bound[v] = false;
        return true;
      }

      Word const&                                          _target;
      std::function<bool(std::vector<Word> const&)> const& _f;
      std::vector<Variable>                                _vars;
      std::vector<std::size_t>                             _codes;
      std::vector<Span>                                    _spans;
      std::vector<bool>                                    _bound;
    };
  }  // namespace

  bool for_each_match(Word const&                                          pattern,
                      Word const&                                          target,
                      std::function<bool(std::vector<Word> const&)> const& f) {
    return Matcher(pattern, target, f).run();
  }

  std::vector<WordSubstitution> all_matches(Word const& pattern, Word const& target) {
    auto                          vars = pattern.variables();
    std::vector<WordSubstitution> result;
    for_each_match(pattern, target, [&](std::vector<Word> const& images) {
      WordSubstitution theta;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        theta.emplace(vars[i], images[i]);
      }
      result.push_back(std::move(theta));
      return true;
    });
    return result;
  }

  Word substitute(Word const& u, WordSubstitution const& theta) {
    std::vector<Variable> letters;
    for (auto x : u) {
      auto it = theta.find(x);
      if (it == theta.end()) {
        letters.push_back(x);
      } else {
        letters.insert(letters.end(), it->second.begin(), it->second.end());
      }
    }
    return Word(std::move(letters));
  }

}  // namespace reesfb
