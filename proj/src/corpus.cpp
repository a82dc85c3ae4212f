#include "reesfb/corpus.hpp"

#include <algorithm>
#include <functional>

namespace reesfb {

  std::vector<Word> canonical_words(std::size_t letters, std::size_t max_length) {
    std::vector<Word>     result;
    std::vector<Variable> alphabet;
    for (std::size_t i = 0; i < letters; ++i) {
      alphabet.push_back(canonical_variable(i, letters));
    }
    std::vector<Variable>        w;
    std::function<void(std::size_t)> grow = [&](std::size_t used) {
      if (!w.empty()) {
        result.emplace_back(w);
      }
      if (w.size() == max_length) {
        return;
      }
      // a new letter may only be the next unused one
      for (std::size_t i = 0; i < std::min(used + 1, letters); ++i) {
        w.push_back(alphabet[i]);
        grow(std::max(used, i + 1));
        w.pop_back();
      }
    };
    grow(0);
    std::sort(result.begin(), result.end(), ShortLex{});
    return result;
  }

  bool two_letter_fb_shape(Word const& u) {
    auto vars = u.variables();
    if (vars.size() > 2 || !structure_profile(u).is_k_limited(2)) {
      return false;
    }
    if (vars.size() == 1) {
      return true;
    }
    auto a = vars[0], b = vars[1];
    // a^n b^m
    std::size_t i = 0;
    while (i < u.size() && u[i] == a) {
      ++i;
    }
    std::size_t j = i;
    while (j < u.size() && u[j] == b) {
      ++j;
    }
    if (j == u.size()) {
      return true;
    }
    // a^n b a^m
    if (j == i + 1) {
      while (j < u.size() && u[j] == a) {
        ++j;
      }
      return j == u.size();
    }
    return false;
  }

  std::vector<CorpusEntry> corpus1() {
    using K = VerdictKind;
    std::vector<CorpusEntry> c = {
        {WordSet::parse("abtba,atbab,abab,aat"), K::NFB, CaseId::N6},
        {WordSet::parse("aabb,abab,abba"), K::FB, CaseId::F1},
        {WordSet::parse("aabb"), K::FB, CaseId::F2},
        {WordSet::parse("atbba"), K::FB, CaseId::F3},
        {WordSet::parse("abbta"), K::FB, CaseId::F4},
        {WordSet::parse("abtab,abtba,atbba"), K::FB, CaseId::F5},
        {WordSet::parse("abtab,abtba,abbta"), K::FB, CaseId::F6},
        {WordSet::parse("abtba"), K::NFB, CaseId::N3},
        {WordSet::parse("abtab"), std::nullopt, std::nullopt},
    };
    for (auto const& u : canonical_words(2, 8)) {
      if (!structure_profile(u).is_k_limited(2)) {
        continue;
      }
      auto kind = two_letter_fb_shape(u) ? K::FB : K::NFB;
      std::optional<CaseId> expected_case;
      if (u.str() == "abba") {
        expected_case = CaseId::N1;
      }
      c.push_back({WordSet({u}), kind, expected_case});
    }
    return c;
  }

  std::vector<WordSet> corpus2() {
    std::vector<WordSet> result;
    for (auto const& u : canonical_words(3, 6)) {
      auto p = structure_profile(u);
      if (p.is_k_limited(2) && p.is_block_n_simple(2)) {
        result.push_back(WordSet({u}));
      }
    }
    return result;
  }

  std::vector<WordSet> corpus_all() {
    std::vector<WordSet> result;
    for (auto const& e : corpus1()) {
      result.push_back(e.words);
    }
    auto c2 = corpus2();
    result.insert(result.end(), c2.begin(), c2.end());
    return result;
  }

}  // namespace reesfb
