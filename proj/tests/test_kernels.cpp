#include <doctest.h>

#include <random>
#include <vector>

#include "reesfb/kernels.hpp"
#include "reesfb/monoid.hpp"
#include "reesfb/satisfaction.hpp"

using namespace reesfb;
namespace k = reesfb::kernels;

TEST_CASE("scalar and AVX2 segment evaluation agree") {
  if (!k::available(k::Isa::avx2)) {
    MESSAGE("AVX2 not available, equivalence not exercised");
    return;
  }
  std::mt19937 rng(7);
  for (auto text : {"abba", "abtba,atbab,abab,aat", "abcacb,aabb", "xyaaxy,babxyaxy"}) {
    ReesMonoid m(WordSet::parse(text));
    auto       order = static_cast<std::uint32_t>(m.size());
    std::uniform_int_distribution<std::uint32_t> elem(0, order - 1);
    for (std::size_t nconsts = 1; nconsts <= 5; ++nconsts) {
      for (std::size_t count : {1u, 7u, 8u, 9u, 31u, 100u}) {
        std::vector<std::uint32_t> consts(nconsts), images(count), a(count), b(count);
        for (auto& c : consts) {
          c = elem(rng);
        }
        for (auto& x : images) {
          x = elem(rng);
        }
        k::scalar::eval_segments(m.table().data(), order, consts.data(), nconsts, images.data(),
                                 count, a.data());
        k::avx2::eval_segments(m.table().data(), order, consts.data(), nconsts, images.data(),
                               count, b.data());
        REQUIRE(a == b);
        CHECK(k::scalar::first_mismatch(a.data(), b.data(), count) == count);
        CHECK(k::avx2::first_mismatch(a.data(), b.data(), count) == count);
      }
    }
  }
}

TEST_CASE("first mismatch positions agree") {
  std::mt19937 rng(11);
  for (std::size_t count : {1u, 5u, 8u, 17u, 64u, 65u}) {
    for (std::size_t at = 0; at < count; at += 3) {
      std::vector<std::uint32_t> a(count), b(count);
      for (std::size_t i = 0; i < count; ++i) {
        a[i] = b[i] = static_cast<std::uint32_t>(rng() % 50);
      }
      b[at] += 1;
      CHECK(k::scalar::first_mismatch(a.data(), b.data(), count) == at);
      if (k::available(k::Isa::avx2)) {
        CHECK(k::avx2::first_mismatch(a.data(), b.data(), count) == at);
      }
    }
  }
}

TEST_CASE("forcing a variant gives identical satisfaction results") {
  ReesMonoid m(WordSet::parse("abtba,atbab,abab,aat"));
  for (auto text : {"xyyx=yxxy", "xtxyty=xtyxty", "xxyy=yyxx", "xyxy=yxyx", "xytxy=yxtyx"}) {
    auto id = Identity::parse(text);
    k::force(k::Isa::scalar);
    auto s = satisfies(m, id, SatisfactionMethod::exhaustive);
    if (k::available(k::Isa::avx2)) {
      k::force(k::Isa::avx2);
      auto v = satisfies(m, id, SatisfactionMethod::exhaustive);
      CHECK(s.holds == v.holds);
      CHECK(s.witness == v.witness);
    }
    k::force(std::nullopt);
  }
  if (!k::available(k::Isa::avx2)) {
    CHECK_THROWS(k::force(k::Isa::avx2));
  }
}
