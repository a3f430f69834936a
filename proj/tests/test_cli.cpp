#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(KMIN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("lr") {
  auto e7 = run("lr --poset e7 --l 5,1 --m 5,3,3 --n 5,5,5,2,1,1");
  CHECK(e7.code == 0);
  CHECK(e7.out == "11\n");
  auto e6 = run("lr --poset e6 --l 2 --m 2");
  CHECK(e6.out == "(4)    1\n(3,1)  1\n(4,1)  1\n");
  auto unit = run("--json lr --poset a:2,2 --l '' --m ''");
  auto j = nlohmann::json::parse(unit.out);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["shape"] == "");
  CHECK(j["terms"][0]["coeff"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("lr --poset e6 --l 9,9 --m 1").code == 2);
  CHECK(run("lr --poset nonsense --l 1 --m 1").code == 2);
  CHECK(run("lr --poset lg:3 --l 1 --m 1").code == 3);
  CHECK(run("--assume-urp lr --poset lg:3 --l 1 --m 1").code == 0);
  CHECK(run("--budget 3 urt --poset e6 --tableau 1,2,3,4").code == 4);
  CHECK(run("show --poset e6 --tableau 1,1").code == 2);
  CHECK(run("verify-paper --only nope").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("urt") {
  auto all = run("urt --poset a:2,2 --all");
  CHECK(all.code == 0);
  CHECK(all.out.find("10 certified, 0 refuted, 0 inconclusive") != std::string::npos);
  auto og = run("--json urt --poset og:5 --all");
  auto j = nlohmann::json::parse(og.out);
  CHECK(j["certified"] == j["tableaux"]);
  CHECK(j["exhausted"] == false);
  auto skew = run("--json urt --poset a:3,3 --tableau '.,.,./.,.,2/1,3,4'");
  auto s = nlohmann::json::parse(skew.out);
  CHECK(s["status"] == "refuted");
  REQUIRE(s["rectifications"].size() == 2);
  CHECK(s["rectifications"][0]["literal"] == "1,2,4/3");
  CHECK(s["rectifications"][1]["literal"] == "1,2,4/3,4");
}

TEST_CASE("verify-paper") {
  auto r = run("verify-paper --only e7-products,cayley");
  CHECK(r.code == 0);
  CHECK(r.out.find("25 tableaux found") != std::string::npos);
  CHECK(r.out.find("7 tableaux") != std::string::npos);
  auto rs = run("--json verify --only rootsys-e6");
  auto j = nlohmann::json::parse(rs.out);
  CHECK(j["pass"] == true);
  CHECK(j["fixtures"][0]["detail"].get<std::string>().find("27/27") != std::string::npos);
}

TEST_CASE("show, rectify, class and word") {
  CHECK(run("show --poset og:6 --minimal 5,3,2").out == "1 2 3 4 5\n  3 4 5\n    5 6\n");
  auto j = run("--json show --poset e7 --tableau '.,.,.,.,./.,1,2,3,5/1,2,4,6,8/7,9/10/11'");
  auto back = run("--json show --json-in '" + j.out + "'");
  CHECK(back.code == 0);
  CHECK(nlohmann::json::parse(back.out) == nlohmann::json::parse(j.out));
  auto all = run("rectify --poset a:3,3 --tableau '.,.,./.,.,2/1,3,4' --all");
  CHECK(all.out == "1 2 4\n3\n\n1 2 4\n3 4\n");
  CHECK(run("rectify --poset a:3,3 --tableau '.,.,./.,.,2/1,3,4' --greedy").code == 0);
  auto cls = run("--json class --poset e6 --tableau 1,2");
  CHECK(nlohmann::json::parse(cls.out)["straight"].size() == 1);
  auto eq = run("--json word equiv 1,2,1 2,1,2");
  CHECK(nlohmann::json::parse(eq.out)["status"] == "equivalent");
  auto weak = run("--json word equiv 1,2 2,1 --weak");
  CHECK(nlohmann::json::parse(weak.out)["status"] == "equivalent");
}
