#include <doctest.h>

#include <algorithm>
#include <random>

#include "reesfb/derivation.hpp"
#include "reesfb/families.hpp"

using namespace reesfb;

namespace {
  // Tries every choice of distinct x, y, a1..ak.
  bool square_oracle(Word const& u, std::size_t k) {
    auto vars = u.variables();
    std::size_t need = k + 2;
    if (vars.size() < need) {
      return false;
    }
    std::vector<std::size_t> pick(need);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (found) {
        return;
      }
      if (depth == need) {
        VariableSet keep;
        for (auto i : pick) {
          keep.insert(vars[i]);
        }
        std::vector<Variable> want{vars[pick[0]], vars[pick[1]]};
        for (std::size_t j = 2; j < need; ++j) {
          want.push_back(vars[pick[j]]);
          want.push_back(vars[pick[j]]);
        }
        want.push_back(vars[pick[0]]);
        want.push_back(vars[pick[1]]);
        found = project(u, keep) == Word(want);
        return;
      }
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (std::find(pick.begin(), pick.begin() + depth, i) == pick.begin() + depth) {
          pick[depth] = i;
          self(self, depth + 1);
        }
      }
    };
    rec(rec, 0);
    return found;
  }
}  // namespace

TEST_CASE("square pattern deletion matches brute force") {
  CHECK(deletes_to_square_pattern(Word::parse("xyaaxy"), 1));
  CHECK(deletes_to_square_pattern(Word::parse("xtyaabbxy"), 2));
  CHECK_FALSE(deletes_to_square_pattern(Word::parse("xyaayx"), 1));
  std::mt19937 rng(7);
  std::vector<Variable> pool{Variable("a"), Variable("b"), Variable("c"), Variable("d"), Variable("e")};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Variable> letters;
    std::size_t len = 4 + rng() % 7;
    for (std::size_t i = 0; i < len; ++i) {
      letters.push_back(pool[rng() % pool.size()]);
    }
    Word u(letters);
    for (std::size_t k = 1; k <= 2; ++k) {
      CHECK_MESSAGE(deletes_to_square_pattern(u, k) == square_oracle(u, k), u.str(), " k=", k);
    }
  }
}

TEST_CASE("delta closure") {
  auto d = delta_closure({Identity::parse("xyx=yxx")});
  // deleting y gives a trivial identity, deleting x as well
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Identity::parse("xyx=yxx").normalized());
  for (auto const& id : delta_closure({jackson(2)})) {
    CHECK_FALSE(id.is_trivial());
    CHECK(id == id.normalized());
  }
}

TEST_CASE("sigma_k") {
  auto s = sigma_k(1, 4);
  CHECK(s.size() == 12);
  for (auto const& id : s) {
    CHECK_FALSE(deletes_to_square_pattern(id.lhs, 1));
    CHECK_FALSE(deletes_to_square_pattern(id.rhs, 1));
  }
  CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("one step application") {
  // x may go to the empty word
  CHECK(one_step_apply(Word::parse("ab"), Identity::parse("xx=x"), true) == std::set<Word>{Word::parse("ab")});
  auto both = one_step_apply(Word::parse("aab"), Identity::parse("xx=x"));
  CHECK(both.count(Word::parse("ab")) == 1);
  CHECK(both.count(Word::parse("aaab")) == 1);
  CHECK(both.count(Word::parse("aabb")) == 1);
  CHECK(both.count(Word::parse("abb")) == 0);
  auto apps = one_step_applications(Word::parse("ab"), Identity::parse("xy=yx"), true);
  bool swapped = false;
  for (auto const& a : apps) {
    if (a.result == Word::parse("ba")) {
      swapped = true;
      CHECK(a.position == 0);
      CHECK(a.length == 2);
    } else {
      CHECK(a.result == Word::parse("ab"));
    }
  }
  CHECK(swapped);
}

TEST_CASE("bounded derivation") {
  IdentitySet sigma{Identity::parse("xxx=xxxx")};
  auto d = derive_bounded(Word::parse("aaa"), Word::parse("aaaaa"), sigma, 3);
  REQUIRE(d);
  CHECK(d->size() == 2);
  CHECK(d->steps.front().from == Word::parse("aaa"));
  CHECK(d->steps.back().to == Word::parse("aaaaa"));
  CHECK_FALSE(derive_bounded(Word::parse("aa"), Word::parse("aaa"), sigma, 4));
  CHECK_THROWS(derive_bounded(Word::parse("ab"), Word::parse("ab"), sigma, 0));
}

TEST_CASE("isoterms with respect to an identity set") {
  IdentitySet s1{sigma_1()};
  CHECK(is_isoterm_wrt(Word::parse("xyx"), s1));
  CHECK(is_isoterm_wrt(Word::parse("xx"), s1));
  // t1 -> aa, t2 -> 1
  CHECK_FALSE(is_isoterm_wrt(Word::parse("xyaaxy"), s1));
  CHECK_FALSE(is_isoterm_wrt(Word::parse("xyxy"), s1));
  CHECK_FALSE(is_isoterm_wrt(Word::parse("xy[t1]x[t2]y"), s1));
}
