#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const fs::path kWork = fs::path(SMYTH_TEST_WORKDIR) / "cli_work";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt";
  const std::string cmd = std::string("\"") + SMYTH_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          (kWork / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& content) {
  fs::create_directories(kWork);
  const fs::path p = kWork / name;
  std::ofstream(p) << content;
  return "\"" + p.string() + "\"";
}

std::string read(const std::string& name) {
  std::ifstream f(kWork / name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kFixture = R"({"matrix": [[3,4,-5],[-3,-4,5],[4,-3,0],[-4,3,0],[5,0,-3],[-5,0,3],[0,5,-4],[0,-5,4]]})";

}  // namespace

TEST_CASE("decide exit codes") {
  CHECK(run("decide 3,4,5").code == 0);
  const auto real = run("decide 1,1,3");
  CHECK(real.code == 1);
  CHECK(real.out.find("place real: FAILS") != std::string::npos);
  CHECK(real.out.find("|a_3|") != std::string::npos);  // 1-based in text
  const auto two = run("--json decide 1,2,2");
  CHECK(two.code == 1);
  const Json d = Json::parse(two.out);
  CHECK(d["places"][1]["place"] == "2");
  CHECK(d["places"][1]["violating_index"] == 0);  // 0-based in JSON
  CHECK(run("decide 1,x").code == 2);
  CHECK(run("decide").code == 2);
  CHECK(run("decide -- -3,4,5").code == 0);
}

TEST_CASE("solve then verify") {
  const auto out = kWork / "w.json";
  const auto s = run("solve 3,4,5 --out \"" + out.string() + "\"");
  CHECK(s.code == 0);
  CHECK(run("verify 3,4,5 --witness \"" + out.string() + "\"").code == 0);
  const auto j = run("--json solve 5,6,7 --out \"" + (kWork / "w567.json").string() + "\"");
  CHECK(j.code == 0);
  const Json r = Json::parse(j.out);
  CHECK(r["decision"]["solvable"] == true);
  CHECK(run("verify 5,6,7 --witness \"" + (kWork / "w567.json").string() + "\"").code == 0);
  // Same flags, same bytes.
  CHECK(run("--json solve 5,6,7").out == j.out);
  const auto t = run("--json solve 3,4,5 --timings");
  CHECK(Json::parse(t.out).contains("timings"));
}

TEST_CASE("solve on unsolvable input prints a certificate") {
  const auto s = run("--json solve 1,2,2");
  CHECK(s.code == 1);
  const Json r = Json::parse(s.out);
  REQUIRE(r["D_schedule"].size() == 1);
  CHECK(r["D_schedule"][0]["D"] == "8");
  CHECK(r["D_schedule"][0]["outcome"] == "certificate");
  CHECK(r["D_schedule"][0]["certificate"].contains("f"));
}

TEST_CASE("solve resource exhaustion exits 2") {
  CHECK(run("solve 17,19,29 --d0 1 --max-d 2").code == 2);
  CHECK(run("solve 3,4,5 --max-points 3").code == 2);
  CHECK(run("solve 3,4,5 --d0 abc").code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify 3,4,5 --witness " + write("a.json", kFixture)).code == 0);
  std::string perturbed = kFixture;
  perturbed.replace(perturbed.find("[5,0,-3]"), 8, "[6,0,-3]");
  const auto p = run("verify 3,4,5 --witness " + write("p.json", perturbed));
  CHECK(p.code == 1);
  CHECK(p.out.find("row 5") != std::string::npos);
  CHECK(run("verify 3,4,5,6 --witness " + write("a2.json", kFixture)).code == 2);
  CHECK(run("verify 3,4,5 --witness " + write("bad.json", "{\"matrix\": [[1,2,")).code == 2);
  CHECK(run("verify 3,4,5 --witness " + write("zero.json", "[[0,0,0]]")).code == 1);
  CHECK(run("verify 3,4,5 --witness \"" + (kWork / "missing.json").string() + "\"").code == 2);
}

TEST_CASE("certificate and oracle") {
  CHECK(run("certificate 1,2,2 --D 8").code == 0);
  CHECK(run("certificate 3,4,5 --D 8").code == 1);
  CHECK(run("certificate 3,4,5 --D 8 --shell-csv \"" + (kWork / "s.csv").string() + "\"").code == 1);
  CHECK(read("s.csv").rfind("c1,c2,L1,L2,L3\n", 0) == 0);
  CHECK(run("oracle 1,1,3 --B 3").code == 1);
  CHECK(run("oracle 1,1,2 --B 2").code == 0);
  CHECK(run("oracle 1,1,2 --B 0").code == 2);
}

TEST_CASE("figure") {
  CHECK(run("figure 5,6,7 --D 25 --out \"" + (kWork / "f.svg").string() + "\"").code == 0);
  const std::string svg = read("f.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(run("figure 3,4,5 --D 10").code == 0);
  CHECK(run("figure 2,3,5,7").code == 2);
}

TEST_CASE("local-check") {
  CHECK(run("local-check 3,4,5 --prime 2 --k 3").code == 0);
  CHECK(run("local-check 1,2,2 --prime 2").code == 2);
  CHECK(run("local-check --lengths 3,4,5").code == 0);
  CHECK(run("local-check --lengths 1,3").code == 1);
  const auto j = run("--json local-check --valuations 0,0,1 --prime 2");
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out)["valuations"] == Json::array({0, 0, 1}));
  CHECK(run("local-check --valuations 0,1 --prime 2").code == 1);
  CHECK(run("local-check 3,4,5").code == 2);
}
