#include <doctest.h>

#include "reesfb/monoid.hpp"

using namespace reesfb;

namespace {
  void check_laws(ReesMonoid const& m) {
    auto n = static_cast<ReesMonoid::element_type>(m.size());
    for (ReesMonoid::element_type a = 0; a < n; ++a) {
      CHECK(m.multiply(ReesMonoid::one, a) == a);
      CHECK(m.multiply(a, ReesMonoid::one) == a);
      CHECK(m.multiply(ReesMonoid::zero, a) == ReesMonoid::zero);
      for (ReesMonoid::element_type b = 0; b < n; ++b) {
        for (ReesMonoid::element_type c = 0; c < n; ++c) {
          REQUIRE(m.multiply(m.multiply(a, b), c) == m.multiply(a, m.multiply(b, c)));
        }
      }
    }
  }
}  // namespace

TEST_CASE("elements in short-lex order after 0 and 1") {
  ReesMonoid m(WordSet::parse("abba"));
  // 0, 1, a, b, ab, ba, bb, abb, bba, abba
  CHECK(m.size() == 10);
  CHECK(m.element_name(0) == "0");
  CHECK(m.element_name(1) == "1");
  CHECK(m.element_name(2) == "a");
  CHECK(m.element_name(9) == "abba");
}

TEST_CASE("products are concatenation or zero") {
  ReesMonoid m(WordSet::parse("abba"));
  auto       a = m.find(Word::parse("a")), b = m.find(Word::parse("b"));
  auto       ab = m.multiply(a, b);
  CHECK(m.word(ab).str() == "ab");
  CHECK(m.multiply(a, a) == ReesMonoid::zero);
  CHECK(m.find(Word::parse("aa")) == ReesMonoid::zero);
  CHECK(m.is_factor(Word()));
  CHECK(m.multiply(m.multiply(ab, b), a) == m.find(Word::parse("abba")));
}

TEST_CASE("table laws") {
  for (auto text : {"abba", "aabb,abab", "abtba,atbab,abab,aat", "a", "abcacb"}) {
    check_laws(ReesMonoid(WordSet::parse(text)));
  }
}

TEST_CASE("right extensions list the nonzero products") {
  ReesMonoid m(WordSet::parse("abtab"));
  for (ReesMonoid::element_type a = 1; a < m.size(); ++a) {
    std::size_t count = 0;
    for (ReesMonoid::element_type b = 0; b < m.size(); ++b) {
      count += m.multiply(a, b) != ReesMonoid::zero ? 1 : 0;
    }
    auto ext = m.right_extensions(a);
    CHECK(ext.size() == count);
    for (auto b : ext) {
      CHECK(m.multiply(a, b) != ReesMonoid::zero);
    }
  }
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(ReesMonoid{WordSet{}}, MonoidError);
  CHECK_THROWS_AS(ReesMonoid(WordSet(std::vector<Word>{Word()})), MonoidError);
}
