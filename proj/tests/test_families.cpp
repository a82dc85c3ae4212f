#include <doctest.h>

#include "reesfb/families.hpp"
#include "reesfb/monoid.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;

TEST_CASE("named identities") {
  CHECK(sigma_mu().str() == "x[t1]xy[t2]y=x[t1]yx[t2]y");
  CHECK(sigma_1().str() == "xy[t1]x[t2]y=yx[t1]x[t2]y");
  CHECK(sigma_2().str() == "x[t1]y[t2]xy=x[t1]y[t2]yx");
}

TEST_CASE("basis A_n") {
  auto a3 = basis_A(3);
  REQUIRE(a3.size() == 2);
  for (auto const& id : a3) {
    CHECK(id.is_balanced() == (id.lhs.size() == id.rhs.size()));
  }
  // x^3 = x^4 and a linear-letter identity
  bool found_power = false;
  for (auto const& id : a3) {
    if (id.variables().size() == 1) {
      found_power = true;
      CHECK(id.lhs.size() + id.rhs.size() == 7);
    }
  }
  CHECK(found_power);
  CHECK_THROWS_AS(basis_A(0), FamilyError);
}

TEST_CASE("words A_n are almost linear") {
  for (auto const& w : words_A(2)) {
    auto p = structure_profile(w);
    CHECK(p.is_almost_linear);
    CHECK(p.max_occurrence == 2);
    CHECK(canonical_form(w) == w);
  }
}

TEST_CASE("jackson words") {
  auto w  = jackson_w(2);
  auto wp = jackson_w_prime(2);
  CHECK(w.size() == wp.size());
  CHECK(w.content() == wp.content());
  CHECK(w != wp);
  CHECK(jackson(2) == Identity(w, wp));
  for (auto [x, c] : w.content()) {
    CHECK(c <= 2);
  }
}

TEST_CASE("witness identities hold where they should") {
  // abba satisfies the first witness family at small levels
  ReesMonoid m(WordSet::parse("abba"));
  for (std::size_t n = 2; n <= 3; ++n) {
    auto id = nfb_witness("N1", n);
    CHECK(id.is_balanced());
    CHECK_FALSE(id.is_trivial());
    CHECK(satisfies(m, id).holds);
  }
  CHECK_THROWS_AS(nfb_witness("N3", 2), FamilyError);
  CHECK_THROWS_AS(nfb_witness("N1", 1), FamilyError);
}

TEST_CASE("open word families are 2-limited and closed under reversal") {
  for (std::size_t part = 1; part <= 5; ++part) {
    auto words = open_words(part, 3);
    REQUIRE_FALSE(words.empty());
    for (auto const& w : words) {
      CHECK(structure_profile(w).is_k_limited(2));
      bool has_reverse = false;
      for (auto const& v : words) {
        has_reverse = has_reverse || equal_up_to_renaming(v, reverse(w));
      }
      CHECK(has_reverse);
    }
  }
  CHECK_THROWS_AS(open_words(6, 3), FamilyError);
}

TEST_CASE("generate by name") {
  CHECK(generate("sigma_1").identities == IdentitySet{sigma_1()});
  CHECK(generate("A3").identities == basis_A(3));
  CHECK(generate("basis_A", 3).identities == basis_A(3));
  CHECK(generate("witness_N1", 2).identities == IdentitySet{nfb_witness("N1", 2)});
  CHECK(generate("open_2", 3).words == open_words(2, 3));
  CHECK(generate("basis_F2").identities == basis_F2());
  CHECK_THROWS_AS(generate("nonsense"), FamilyError);
  for (auto const& name : family_names()) {
    if (name.find('<') != std::string::npos) {
      continue;
    }
    CHECK_NOTHROW(generate(name, 3));
  }
}

TEST_CASE("finite bases hold in their representatives") {
  CHECK(satisfies_all(ReesMonoid(WordSet::parse("aabb,abab,abba")), basis_F1()).holds);
  CHECK(satisfies_all(ReesMonoid(WordSet::parse("aabb")), basis_F2()).holds);
  CHECK(satisfies_all(ReesMonoid(WordSet::parse("atbba")), basis_F3()).holds);
  CHECK(satisfies_all(ReesMonoid(WordSet::parse("abbta")), basis_F4()).holds);
}
