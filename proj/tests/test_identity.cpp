#include <doctest.h>

#include "reesfb/identity.hpp"

using namespace reesfb;

TEST_CASE("parse and print identities") {
  auto id = Identity::parse("xytxy = yxtyx");
  CHECK(id.str() == "xytxy=yxtyx");
  CHECK_THROWS_AS(Identity::parse("xy"), ParseError);
  CHECK_THROWS_AS(Identity::parse("x=y=z"), ParseError);
}

TEST_CASE("trivial and balanced") {
  CHECK(Identity::parse("xy=xy").is_trivial());
  CHECK(Identity::parse("xy=yx").is_balanced());
  CHECK_FALSE(Identity::parse("xx=xxx").is_balanced());
  CHECK_FALSE(Identity::parse("xy=yx").is_trivial());
}

TEST_CASE("unstable pairs") {
  auto pairs = Identity::parse("xytxy=xytyx").unstable_pairs();
  REQUIRE(pairs.size() == 1);
  CHECK(((pairs[0].first == Variable("x") && pairs[0].second == Variable("y"))
         || (pairs[0].first == Variable("y") && pairs[0].second == Variable("x"))));
  CHECK(Identity::parse("xy=xy").unstable_pairs().empty());
}

TEST_CASE("normalization is renaming and side invariant") {
  auto a = Identity::parse("xytxy=yxtyx").normalized();
  auto b = Identity::parse("bacba=abcab").normalized();
  CHECK(a == b);
  CHECK(Identity::parse("xy=yx").swapped().normalized() == Identity::parse("xy=yx").normalized());
  CHECK(Identity::parse("xyz=zyx").reversed().str() == "zyx=xyz");
}
