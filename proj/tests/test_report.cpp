#include <doctest.h>

#include "reesfb/report.hpp"

using namespace reesfb;

TEST_CASE("verdict json") {
  auto w = WordSet::parse("abba");
  auto v = certify(w, classify(w), 2);
  auto j = to_json(v);
  CHECK(j["scope"] == "ok");
  CHECK(j["verdict"] == "NFB");
  CHECK(j["case"] == "N1");
  CHECK(j["trace"].size() == 10);
  CHECK(j["certificate"]["attached"] == true);
  // round trip keeps key order and values
  auto text = j.dump(2);
  CHECK(Json::parse(text).dump(2) == text);
  // no timings, so reruns are identical
  CHECK(to_json(certify(w, classify(w), 2)).dump() == j.dump());
}

TEST_CASE("out of scope json") {
  auto v = classify(WordSet::parse("abcacb"));
  auto j = to_json(v);
  CHECK(j["scope"] == "out_of_scope");
  CHECK(j.contains("offending"));
  CHECK_FALSE(j.contains("verdict"));
  CHECK(render(v).find("abcacb") != std::string::npos);
}

TEST_CASE("other reports") {
  auto r = is_isoterm(Word::parse("xytxy"), WordSet::parse("abtba"));
  auto j = to_json(r);
  CHECK(j.dump().find("yxtyx") != std::string::npos);
  CHECK_FALSE(render(r).empty());

  ReesMonoid m(WordSet::parse("ab"));
  auto mj = to_json(m);
  CHECK(render(m).find("ab") != std::string::npos);
  CHECK_FALSE(mj.empty());

  auto id = Identity::parse("xy=yx");
  auto s  = satisfies(m, id);
  CHECK_FALSE(s.holds);
  CHECK_FALSE(render(m, id, s).empty());
  CHECK(to_json(m, id, s).dump().find("false") != std::string::npos);

  auto d = decompose(Word::parse("abtab"));
  CHECK(to_json(d).dump().find("ata") != std::string::npos);
  CHECK(render(d).find("btb") != std::string::npos);

  auto f = generate("sigma_1");
  CHECK(render(f).find("yx[t1]x[t2]y") != std::string::npos);
  CHECK(to_json(f).dump().find("sigma_1") != std::string::npos);
}
