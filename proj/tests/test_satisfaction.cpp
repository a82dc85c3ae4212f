#include <doctest.h>

#include <random>

#include "reesfb/families.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;

TEST_CASE("evaluate") {
  ReesMonoid m(WordSet::parse("abba"));
  auto       a = m.find(Word::parse("a")), b = m.find(Word::parse("b"));
  Assignment theta{{Variable("x"), a}, {Variable("y"), b}};
  CHECK(m.word(evaluate(m, Word::parse("xyyx"), theta)).str() == "abba");
  CHECK(evaluate(m, Word::parse("xx"), theta) == ReesMonoid::zero);
  CHECK(evaluate(m, Word(), theta) == ReesMonoid::one);
  CHECK_THROWS(evaluate(m, Word::parse("z"), theta));
}

TEST_CASE("known satisfaction facts") {
  ReesMonoid aabb(WordSet::parse("aabb"));
  CHECK(satisfies(aabb, sigma_1()).holds);
  CHECK(satisfies(aabb, Identity::parse("xxx=xxxx")).holds);
  CHECK(satisfies_all(aabb, basis_F2()).holds);

  ReesMonoid abtba(WordSet::parse("abtba"));
  auto       r = satisfies(abtba, sigma_1());
  CHECK_FALSE(r.holds);
  CHECK(evaluate(abtba, sigma_1().lhs, r.witness) == r.lhs_value);
  CHECK(evaluate(abtba, sigma_1().rhs, r.witness) == r.rhs_value);
  CHECK(r.lhs_value != r.rhs_value);
}

TEST_CASE("exhaustive and instance methods agree") {
  std::vector<char const*> sets = {"abba", "abab", "aabb", "abtab,abtba", "abtba,atbab,abab,aat",
                                   "abcacb", "atbba"};
  std::vector<char const*> ids  = {"xyyx=yxxy",   "xx=xxx",        "xyxy=yxyx",
                                   "xytxy=yxtyx", "xytxy=xytyx",   "xxyy=yyxx",
                                   "xtx=xxt",     "xyzxy=yxzyx",   "x[t1]xy[t2]y=x[t1]yx[t2]y",
                                   "xyx=yxy",     "xxyty=yxxty",   "ytyxx=ytxxy"};
  for (auto s : sets) {
    ReesMonoid m(WordSet::parse(s));
    for (auto text : ids) {
      auto id = Identity::parse(text);
      auto e  = satisfies(m, id, SatisfactionMethod::exhaustive);
      auto i  = satisfies(m, id, SatisfactionMethod::instances);
      CHECK_MESSAGE(e.holds == i.holds, s, " ", text);
      if (!i.holds) {
        CHECK(evaluate(m, id.lhs, i.witness) != evaluate(m, id.rhs, i.witness));
      }
    }
  }
}

TEST_CASE("instances enumerate exactly the nonzero assignments") {
  ReesMonoid m(WordSet::parse("abtab"));
  auto       u     = Word::parse("xyx");
  auto       found = instances(m, u);
  std::size_t brute = 0;
  for (Element a = 1; a < m.size(); ++a) {
    for (Element b = 1; b < m.size(); ++b) {
      Assignment theta{{Variable("x"), a}, {Variable("y"), b}};
      brute += evaluate(m, u, theta) != ReesMonoid::zero ? 1 : 0;
    }
  }
  CHECK(found.size() == brute);
  CHECK(std::is_sorted(found.begin(), found.end()));

  std::size_t full = 0;
  for_each_instance(
      m, u,
      [&](std::span<Element const> images, Element) {
        CHECK(images[0] != ReesMonoid::one);
        CHECK(images[1] != ReesMonoid::one);
        ++full;
        return true;
      },
      true);
  CHECK(full < found.size());
}

TEST_CASE("satisfies_all reports the first failure") {
  ReesMonoid  m(WordSet::parse("abba"));
  IdentitySet ids = {Identity::parse("xxx=xxxx"), Identity::parse("xyyx=yxxy"),
                     Identity::parse("xy=yx")};
  auto        r   = satisfies_all(m, ids);
  CHECK_FALSE(r.holds);
  REQUIRE(r.failed);
  CHECK(r.failed->str() == "xyyx=yxxy");
}
