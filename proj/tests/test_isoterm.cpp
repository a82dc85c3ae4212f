#include <doctest.h>

#include "reesfb/isoterm.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;

namespace {
  bool iso(char const* u, char const* w) {
    return is_isoterm(Word::parse(u), WordSet::parse(w)).is_isoterm;
  }
}  // namespace

TEST_CASE("known isoterm verdicts") {
  CHECK(iso("xyyx", "abba"));
  CHECK_FALSE(iso("xtxyty", "abba"));
  CHECK(iso("xtxyty", "abab"));
  CHECK(iso("xy[t1]x[t2]y", "abtba"));
  CHECK_FALSE(iso("xx", "ab"));
  CHECK(iso("xx", "aa"));
  CHECK(iso("x", "a"));
}

TEST_CASE("reports carry the least partner") {
  auto r = is_isoterm(Word::parse("xytxy"), WordSet::parse("abtba"));
  CHECK_FALSE(r.is_isoterm);
  REQUIRE(r.partner);
  CHECK(r.partner->str() == "xytxy=yxtyx");
  CHECK(r.mode == PartnerMode::balanced);
  CHECK(satisfies(ReesMonoid(WordSet::parse("abtba")), *r.partner).holds);
}

TEST_CASE("squares are not forced to stay squares by xtx alone") {
  // xtx is an isoterm for S({abtab}) yet xx = xxx holds there
  WordSet w = WordSet::parse("abtab");
  CHECK(iso("xtx", "abtab"));
  CHECK(satisfies(ReesMonoid(w), Identity::parse("xx=xxx")).holds);
  auto r = is_isoterm(Word::parse("xx"), w);
  CHECK_FALSE(r.is_isoterm);
  CHECK(r.mode == PartnerMode::bounded);
  CHECK_FALSE(iso("xyyx", "abtab"));
}

TEST_CASE("candidate partners") {
  auto c = candidate_partners(Word::parse("xytxy"), WordSet::parse("abtba"));
  CHECK(c.size() == 29);
  CHECK(std::find(c.begin(), c.end(), Word::parse("xytxy")) == c.end());
  auto b = candidate_partners(Word::parse("xx"), WordSet::parse("ab"));
  CHECK(std::find(b.begin(), b.end(), Word::parse("xxx")) != b.end());
}

TEST_CASE("fast checks agree where defined") {
  for (auto text : {"abba", "abab", "abtba", "abtab", "aabb", "atbba", "abtba,atbab,abab,aat"}) {
    IsotermEngine e(WordSet::parse(text));
    for (auto const& p : battery::all()) {
      if (auto f = e.is_isoterm_fast(p)) {
        CHECK_MESSAGE(*f == e.is_isoterm(p), text, " ", battery::name(p));
      }
    }
    // the xtxyty shortcut always answers
    CHECK(e.is_isoterm_fast(battery::xtxyty()).has_value());
  }
}

TEST_CASE("preceq and equiv") {
  auto w = WordSet::parse("aabb,abab,abba");
  CHECK(preceq(w, WordSet::parse("aabb")));
  CHECK(preceq(w, WordSet::parse("abba")));
  CHECK_FALSE(preceq(WordSet::parse("aabb"), WordSet::parse("abab")));
  CHECK(equiv(WordSet::parse("ab"), WordSet::parse("xy")));
  CHECK(preceq(w, w));
}

TEST_CASE("isot2 catalog and isot2") {
  auto catalog = isot2_catalog(Isot2Bounds{});
  CHECK(catalog.size() == 133);
  for (auto const& u : catalog) {
    CHECK(u.non_linear_variables().size() <= 2);
    CHECK(u == canonical_form(u));
  }
  WordSet w  = WordSet::parse("abtab");
  auto    i2 = isot2(w, default_isot2_bounds(w));
  CHECK(std::find(i2.begin(), i2.end(), Word::parse("abcab")) != i2.end());
  CHECK(std::find(i2.begin(), i2.end(), Word::parse("aa")) == i2.end());
}

TEST_CASE("battery names") {
  CHECK(battery::name(battery::xtxyty()) == "xtxyty");
  CHECK(battery::name(battery::xyt1xt2y()) == "xyt1xt2y");
  CHECK(battery::all().size() == 10);
}
