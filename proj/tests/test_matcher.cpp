#include <doctest.h>

#include <functional>
#include <set>

#include "reesfb/matcher.hpp"

using namespace reesfb;

namespace {
  // Every way to cut the target into |vars| pieces, kept when consistent.
  std::set<WordSubstitution> brute_matches(Word const& pattern, Word const& target) {
    auto                          vars = pattern.variables();
    std::set<WordSubstitution>    result;
    WordSubstitution              theta;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t pos) {
      if (i == pattern.size()) {
        if (pos == target.size()) {
          result.insert(theta);
        }
        return;
      }
      auto x  = pattern[i];
      auto it = theta.find(x);
      if (it != theta.end()) {
        auto const& img = it->second;
        if (pos + img.size() <= target.size() && target.factor(pos, img.size()) == img) {
          go(i + 1, pos + img.size());
        }
        return;
      }
      for (std::size_t len = 0; pos + len <= target.size(); ++len) {
        theta[x] = target.factor(pos, len);
        go(i + 1, pos + len);
        theta.erase(x);
      }
    };
    go(0, 0);
    return result;
  }
}  // namespace

TEST_CASE("matches agree with brute force") {
  for (auto [p, t] : std::vector<std::pair<char const*, char const*>>{
           {"xx", "abab"}, {"xyx", "abcab"}, {"xtx", "aaaa"}, {"xy", "abc"},
           {"xyyx", "abba"}, {"x", ""}, {"xyz", "ab"}, {"xxyy", "aabbaabb"}}) {
    auto pattern = Word::parse(p), target = Word::parse(t);
    auto got     = all_matches(pattern, target);
    std::set<WordSubstitution> found(got.begin(), got.end());
    CHECK(found.size() == got.size());
    CHECK(found == brute_matches(pattern, target));
    for (auto const& theta : got) {
      CHECK(substitute(pattern, theta) == target);
    }
  }
}

TEST_CASE("early stop") {
  int  calls = 0;
  bool done  = for_each_match(Word::parse("xy"), Word::parse("abcd"), [&](auto const&) {
    ++calls;
    return false;
  });
  CHECK_FALSE(done);
  CHECK(calls == 1);
}

TEST_CASE("substitute leaves unmapped variables") {
  WordSubstitution theta{{Variable("x"), Word::parse("ab")}};
  CHECK(substitute(Word::parse("xyx"), theta).str() == "abyab");
}
