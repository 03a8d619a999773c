#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CANON_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(CANON_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const char* kIdentity =
    R"({"U":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],[[0,0],[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0],[1,0]]],"omega":[[0,0],[0,0],[0,0],[0,0]],"iota":0})";

std::string with_omega(const std::string& omega) {
  std::string s = kIdentity;
  const auto at = s.find("\"omega\":");
  const auto end = s.find(",\"iota\"");
  return s.substr(0, at) + "\"omega\":" + omega + s.substr(end);
}

}  // namespace

TEST_CASE("identity composed with identity") {
  const std::string f = write_temp("id.json", kIdentity);
  const Run r = run("compose " + f + " " + f);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json::parse(kIdentity));
}

TEST_CASE("translation composition end to end") {
  const std::string a = write_temp("a.json", with_omega("[[1,0],[0,0],[0,0],[0,0]]"));
  const std::string b = write_temp("b.json", with_omega("[[0,1],[0,0],[0,0],[0,0]]"));
  const Run r = run("compose " + a + " " + b);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["iota"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["omega"][0] == nlohmann::json::parse("[1.0, 1.0]"));
}

TEST_CASE("invalid U is rejected with a diagnostic") {
  std::string bad = kIdentity;
  bad.replace(bad.find("[[1,0],[0,0]"), 12, "[[1,0],[2,0]");
  const std::string f = write_temp("bad.json", bad);
  CHECK(run("inverse " + f).code != 0);
  const std::string cmd = std::string(CANON_CLI) + " inverse " + f + " 2>&1 >/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 512> buf{};
  const std::size_t n = fread(buf.data(), 1, buf.size(), p);
  pclose(p);
  CHECK(std::string(buf.data(), n).find("U^dagger eta U = eta") != std::string::npos);
}

TEST_CASE("malformed JSON is a usage error") {
  CHECK(run("inverse '{\"U\": [1, 2'").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("ladder --kappa 1,2").code == 2);
}

TEST_CASE("inverse round trips through JSON") {
  const std::string a = write_temp("t.json", with_omega("[[0.25,-1.5],[3,0.125],[0,2],[-0.5,0]]"));
  const Run once = run("inverse " + a);
  REQUIRE(once.code == 0);
  const std::string b = write_temp("t_inv.json", once.out);
  const Run twice = run("inverse " + b);
  REQUIRE(twice.code == 0);
  CHECK(nlohmann::json::parse(twice.out) == nlohmann::json::parse(with_omega("[[0.25,-1.5],[3,0.125],[0,2],[-0.5,0]]")));
}

TEST_CASE("ladder output") {
  const Run r = run("ladder --kappa 0,0,0,0 --rungs 3 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out == "rung,n,a,b\n0,3,0,0\n1,4,1,1\n2,5,2,2\n");
}

TEST_CASE("classify a timelike canonical point") {
  const Run r = run("classify --group canonical --w 1,0,0,0");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbit"] == "O+");
  CHECK(j["little_group"] == "U(3)");
}

TEST_CASE("boost with zero parameters echoes the state") {
  const Run r = run("boost --state 1,2,3,4,5,6,7,8");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["state"] == nlohmann::json::parse("[1.0,2.0,3.0,4.0,5.0,6.0,7.0,8.0]"));
}

TEST_CASE("patterns, casimir and transform") {
  const Run p = run("patterns --weight 2,1,0 --format csv");
  REQUIRE(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 9);
  const Run c = run("casimir --order 1 --degree-cap 2 --kappa0 3/2");
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["dim"] == 15);
  CHECK(j["entries"][0] == nlohmann::json::parse(R"([0,0,"3","2","0","1"])"));
  const Run t = run("transform --m 0,0,0,0 --x 0,0,0,0");
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["psi"][0].get<double>() == doctest::Approx(1.0 / 3.141592653589793).epsilon(1e-8));
}

TEST_CASE("config file and flag precedence") {
  const std::string cfg = write_temp("canon.cfg", "# constants\nc = 2\nformat = csv\n");
  const Run r = run("--config " + cfg + " boost --state 1,0,0,0,0,0,0,0 --beta 1,0,0");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("key,value", 0) == 0);
  CHECK(run("--config " + cfg + " --format json boost --state 1,0,0,0,0,0,0,0").out.front() == '{');
  CHECK(run("--config " + write_temp("bad.cfg", "speed = 3\n") + " boost --state 1,0,0,0,0,0,0,0").code == 2);
}

TEST_CASE("verify gelfand suite and determinism") {
  const Run a = run("verify --suite gelfand --seed 5");
  const Run b = run("verify --suite gelfand --seed 5");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["passed"] == true);
  for (const auto& item : j["invariants"]) CHECK(item["exact"] == true);
  CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("verify algebra suite at degree cap 6") {
  const Run r = run("verify --suite algebra --degree-cap 6 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("realization homomorphism") != std::string::npos);
}
