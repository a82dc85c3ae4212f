#include <doctest.h>


#include "reesfb/decompose.hpp"
#include "reesfb/monoid.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;

namespace {
  std::vector<std::string> names(std::vector<Variable> const& xs) {
    std::vector<std::string> out;
    for (auto x : xs) {
      out.push_back(x.name());
    }
    return out;
  }
}  // namespace

TEST_CASE("aatbb splits at the linear letter") {
  auto e = delblock_eligibility(Word::parse("aatbb"));
  REQUIRE(e.eligible);
  CHECK(e.tag == DecompositionCase::block_1_simple);
  CHECK(names(e.T) == std::vector<std::string>{"t"});
  CHECK(names(e.A) == std::vector<std::string>{"a", "b"});
  CHECK(e.B.empty());
  auto d = decompose(Word::parse("aatbb"));
  CHECK(d.result == WordSet::parse("aat,tbb"));
}

TEST_CASE("abtab keeps itself") {
  auto d = decompose(Word::parse("abtab"));
  CHECK(d.result == WordSet::parse("abtab,ata,btb"));
  auto c = decompose(Word::parse("abtab"), true);
  CHECK(c.result.size() == 3);
  CHECK(c.result == d.result.canonical());
}

TEST_CASE("ineligible words") {
  CHECK_FALSE(delblock_eligibility(Word::parse("abba")).eligible);
  CHECK_THROWS_AS(decompose(Word::parse("abba")), IneligibleError);
  auto one = delblock_eligibility(Word::parse("ataa"));
  CHECK_FALSE(one.eligible);
  CHECK(one.reason.find("two") != std::string::npos);
}

TEST_CASE("eligible words check out to a small bound") {
  for (char const* u : {"aatbb", "abtab", "atbtab"}) {
    auto e = delblock_eligibility(Word::parse(u));
    if (!e.eligible) {
      continue;
    }
    auto d = decompose(Word::parse(u));
    auto c = check_equivalence_bounded(Word::parse(u), d, 5);
    CHECK_MESSAGE(c.passed(), u);
  }
}

TEST_CASE("agreement finds differences") {
  auto a = bounded_identity_agreement(WordSet::parse("abab"), WordSet::parse("abba"), 4);
  CHECK_FALSE(a.agree);
  REQUIRE(a.counterexample);
  ReesMonoid ma(WordSet::parse("abab")), mb(WordSet::parse("abba"));
  CHECK(satisfies(ma, *a.counterexample).holds != satisfies(mb, *a.counterexample).holds);

  auto same = bounded_identity_agreement(WordSet::parse("abab"), WordSet::parse("[p][q][p][q]"), 5);
  CHECK(same.agree);
  CHECK(same.words > 0);
}

TEST_CASE("agreement matches direct satisfaction on small identities") {
  // two sets that differ on some identity in two variables
  std::vector<WordSet> sets{WordSet::parse("aab"), WordSet::parse("aba"), WordSet::parse("abb"),
                            WordSet::parse("ab"), WordSet::parse("aabb")};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      auto agree = bounded_identity_agreement(sets[i], sets[j], 4).agree;
      // brute force over identities in x, y of length <= 4
      ReesMonoid mi(sets[i]), mj(sets[j]);
      std::vector<Word> words;
      for (std::size_t len = 1; len <= 4; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
          std::vector<Variable> letters;
          for (std::size_t k = 0; k < len; ++k) {
            letters.push_back(Variable((bits >> k) & 1u ? "y" : "x"));
          }
          words.emplace_back(letters);
        }
      }
      bool differ = false;
      for (auto const& u : words) {
        for (auto const& v : words) {
          if (u < v && satisfies(mi, Identity(u, v)).holds != satisfies(mj, Identity(u, v)).holds) {
            differ = true;
          }
        }
      }
      CHECK_MESSAGE(agree == !differ, sets[i].str(), " vs ", sets[j].str());
    }
  }
}
