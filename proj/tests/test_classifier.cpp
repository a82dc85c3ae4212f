#include <doctest.h>

#include <set>

#include "reesfb/classifier.hpp"
#include "reesfb/corpus.hpp"

using namespace reesfb;

namespace {
  Verdict run(char const* w) {
    return classify(WordSet::parse(w));
  }
  bool is_fb(CaseId c) {
    return c == CaseId::F1 || c == CaseId::F2 || c == CaseId::F3 || c == CaseId::F4 || c == CaseId::F34 || c == CaseId::F5
           || c == CaseId::F6;
  }
}  // namespace

TEST_CASE("every flag vector reaches a leaf") {
  std::set<CaseId> seen;
  for (unsigned bits = 0; bits < 1024; ++bits) {
    BatteryFlags f{};
    for (std::size_t i = 0; i < 10; ++i) {
      f[i] = (bits >> i) & 1u;
    }
    auto leaf = decide(f);
    CHECK(leaf.case_id != CaseId::none);
    CHECK(leaf.branch >= 'a');
    CHECK(leaf.branch <= 'g');
    CHECK((leaf.case_id != CaseId::F3 && leaf.case_id != CaseId::F4));
    if (leaf.both_duals) {
      CHECK(leaf.case_id == CaseId::F5);
    }
    seen.insert(leaf.case_id);
  }
  // N8 only comes from the standalone test
  CHECK(seen.size() == 12);
  CHECK(seen.count(CaseId::N8) == 0);
}

TEST_CASE("leaves depend on the flags they read") {
  BatteryFlags all{};
  all.fill(true);
  CHECK(decide(all).case_id == CaseId::F1);
  BatteryFlags none{};
  CHECK(decide(none).case_id == CaseId::F34);
}

TEST_CASE("known verdicts") {
  struct Row {
    char const* words;
    VerdictKind kind;
    CaseId      c;
  };
  Row rows[] = {
      {"aabb,abab,abba", VerdictKind::FB, CaseId::F1},
      {"aabb", VerdictKind::FB, CaseId::F2},
      {"atbba", VerdictKind::FB, CaseId::F3},
      {"abbta", VerdictKind::FB, CaseId::F4},
      {"abba", VerdictKind::NFB, CaseId::N1},
      {"abab", VerdictKind::NFB, CaseId::N3},
      {"abtba", VerdictKind::NFB, CaseId::N3},
      {"aa", VerdictKind::FB, CaseId::F3},
  };
  for (auto const& r : rows) {
    auto v = run(r.words);
    CHECK_MESSAGE(v.kind == r.kind, r.words);
    CHECK_MESSAGE(v.case_id == r.c, r.words, " got ", to_string(v.case_id));
    CHECK(v.trace.size() == 10);
    CHECK(v.scope.ok);
  }
}

TEST_CASE("corpus expectations") {
  for (auto const& e : corpus1()) {
    auto v = classify(e.words);
    if (e.expected) {
      CHECK_MESSAGE(v.kind == *e.expected, e.words.str());
    }
    if (e.expected_case) {
      CHECK_MESSAGE(v.case_id == *e.expected_case, e.words.str());
    }
    CHECK(is_fb(v.case_id) == (v.kind == VerdictKind::FB));
  }
}

TEST_CASE("verdicts do not depend on letter names or order of members") {
  auto a = run("abtba");
  auto b = run("[q1][q2][t]b[q2][q1]");
  CHECK(a.case_id == CaseId::N3);
  CHECK(b.case_id == a.case_id);
  auto c = run("abba,aabb");
  auto d = run("aabb,abba");
  CHECK(c.case_id == d.case_id);
}

TEST_CASE("scope") {
  auto three = validate_scope(WordSet::parse("abcacb"));
  CHECK_FALSE(three.ok);
  CHECK(three.offending);
  CHECK_FALSE(validate_scope(WordSet::parse("aabba")).ok);
  CHECK(validate_scope(WordSet::parse("abtab,aat")).ok);
  auto v = run("aaa");
  CHECK(v.kind == VerdictKind::OutOfScope);
}

TEST_CASE("certificates check") {
  auto w = WordSet::parse("abba");
  auto v = certify(w, classify(w), 2);
  CHECK(v.certificate.attached);
  CHECK_FALSE(v.certificate.witnesses.empty());
  for (auto const& c : v.certificate.witnesses) {
    CHECK(c.holds);
  }
  auto f = WordSet::parse("aabb");
  auto vf = certify(f, classify(f));
  REQUIRE_FALSE(vf.certificate.bases.empty());
  CHECK(vf.certificate.bases.front().holds);
}

TEST_CASE("standalone tests") {
  auto fired = [](char const* w, std::size_t i) {
    auto t = standalone_nfb_tests(WordSet::parse(w), false);
    REQUIRE(t.size() == 2);
    return t[i].fires;
  };
  CHECK(fired("abba", 0));
  CHECK_FALSE(fired("abab", 0));
  CHECK(fired("abtab", 1));
  CHECK_FALSE(fired("abtba", 1));
  // out of scope sets still get the tests
  CHECK_NOTHROW(standalone_nfb_tests(WordSet::parse("abcacb"), false));
}
