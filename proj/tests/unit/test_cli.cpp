#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(HKPROD_DATA_DIR) + "/" + name + ".session"; }

Run run(const std::string& args) {
  std::string cmd = std::string(HKPROD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_session(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("hkprod_cli_" + name + ".session");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("colength") {
  auto r = run("colength " + data("plane2") + " A");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = run("colength " + data("plane2") + " X");
  CHECK(r.code == 0);
  CHECK(r.out == "infinite\n");
  CHECK(run("colength " + data("plane2") + " Nope").code == 2);
  CHECK(run("colength /nonexistent.session I").code == 2);
}

TEST_CASE("hk tables") {
  auto r = run("hk " + data("fermat2") + " J --qmax 3 --csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "q,colength,normalized_num,normalized_den\n"
        "1,3,3,1\n2,12,3,1\n4,48,3,1\n8,192,3,1\n"
        "# estimate,3,sequence-last,unresolved\n");

  r = run("hk " + data("plane2") + " M --qmax 2 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  REQUIRE(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) CHECK(row["normalized"] == "1");
  CHECK(j["estimate"]["method"] == "exact-regular");

  r = run("hk " + data("plane2") + " M --qmax 0 --csv");
  CHECK(r.out.find("1,1,1,1\n#") != std::string::npos);
  CHECK(run("hk " + data("plane2") + " X --qmax 1").code == 2);
  CHECK(run("hk " + data("fermat2") + " M --method regular").code == 2);
}

TEST_CASE("probe") {
  auto r = run("probe " + data("fermat2") + " -z x^2 -i J -c x^2 --qmax 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ConsistentUpTo(8)", 0) == 0);
  r = run("probe " + data("plane2") + " -z x -i I -c 1 --qmax 3");
  CHECK(r.out.rfind("RefutedAt(2)", 0) == 0);
  CHECK(r.out.find("x^2") != std::string::npos);
  r = run("probe " + data("fermat2") + " -z y -i J -c 1 --qmax 2");
  CHECK(r.out.rfind("ConsistentUpTo(4)", 0) == 0);
  CHECK(run("probe " + data("plane2") + " -z 'x+' -i I -c 1").code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + data("plane2") + " len-identity --trials 200 --seed 1").code == 0);
  CHECK(run("verify " + data("space5") + " square --trials 50 --seed 7").code == 0);
  CHECK(run("verify " + data("plane2") + " eqconds -I I -J M").code == 0);
  // A user-supplied spread below the true value can be violated.
  CHECK(run("verify " + data("plane2") + " hk-product -I I -J M --mode user:1").code == 1);
  CHECK(run("verify " + data("plane2") + " thm-9").code == 2);
  CHECK(run("verify " + data("plane2") + " len-identity --family sparse").code == 2);
  CHECK(run("verify " + data("plane2") + " len-identity -I Nope -J M").code == 2);
  CHECK(run("verify " + data("fermat2") + " hk-product -I M -J J --mode regular").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  auto bad = temp_session("bad", "ring: p=6; vars=x\n");
  CHECK(run("colength " + bad + " I").code == 2);
}

TEST_CASE("verify output is deterministic") {
  const std::string args = "verify " + data("fermat2") + " all --trials 4 --seed 11 --qmax 2";
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(nlohmann::json::parse(line)["schema"] == 1);
  CHECK(run("verify " + data("fermat2") + " all --trials 4 --seed 12 --qmax 2").out != a.out);

  auto csv = run("verify " + data("plane2") + " cor-power -I Q -n 2 --csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("checker,fixture,lhs,rhs,relation,holds,q\n", 0) == 0);
}
