#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {
  struct Run {
    int         code = -1;
    std::string out;
  };

  Run cli(std::string const& args) {
    std::string cmd = std::string(REESFB_CLI) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t            n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }
}  // namespace

TEST_CASE("classify") {
  auto r = cli("classify abba --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "NFB");
  CHECK(j["case"] == "N1");
  auto t = cli("classify aabb");
  CHECK(t.code == 0);
  CHECK(t.out.find("F2") != std::string::npos);
}

TEST_CASE("json flag works before the verb too") {
  auto r = cli("--json classify aabb --no-certify");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["case"] == "F2");
}

TEST_CASE("exit codes") {
  CHECK(cli("classify abcacb").code == 2);
  CHECK(cli("decompose abba").code == 2);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("check --wordset ab --identity x=").code == 0);
  CHECK(cli("check --wordset ab --identity 'x=y=z'").code == 1);
  CHECK(cli("isoterm --wordset ab --pattern 'a1'").code == 1);
}

TEST_CASE("other verbs") {
  auto iso = cli("isoterm --wordset abtba --pattern xytxy --json");
  CHECK(iso.code == 0);
  CHECK(iso.out.find("yxtyx") != std::string::npos);

  auto chk = cli("check --wordset abba --identity xyyx=yxxy");
  CHECK(chk.code == 0);

  CHECK(cli("monoid ab").code == 0);
  CHECK(cli("family sigma_2").out.find("x[t1]y[t2]yx") != std::string::npos);
  auto sk = cli("sigma-k --k 1 --n-cap 4 --json");
  CHECK(sk.code == 0);
  CHECK(nlohmann::json::parse(sk.out)["identities"].size() == 12);

  auto d = cli("decompose abtab --verify-bound 5 --json");
  CHECK(d.code == 0);
  CHECK(d.out.find("ata") != std::string::npos);

  CHECK(cli("isot2 abab --max-occ 2").code == 0);
}
