#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "mono/cli.hpp"
#include "mono/json_io.hpp"

using namespace mono;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out.substr(0, out.find('\n'))); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mono");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mono_cli_" + name)).string();
}

const std::string kGroup = R"({"free_rank":1,"torsion_moduli":[]})";
const std::string kNorm = R"({"type":"capped_l1","weights":["1"]})";

std::string built_table(std::size_t depth = 50) {
  const std::string path = temp_file("table_" + std::to_string(depth) + ".json");
  const Outcome o = invoke({"build", "--group", kGroup, "--norm", kNorm, "--depth",
                            std::to_string(depth), "--out", path});
  REQUIRE(o.code == kExitOk);
  return path;
}

}  // namespace

TEST_CASE("build") {
  const std::string path = temp_file("build.json");
  const Outcome o = invoke({"build", "--group", kGroup, "--norm", kNorm, "--out", path});
  CHECK(o.code == kExitOk);
  const json j = o.parsed();
  CHECK(j["depth"] == 50);
  CHECK(j["k"] == "620032166737800025029518121518371781111");
  CHECK(std::filesystem::exists(path));
}

TEST_CASE("eval") {
  const std::string table = built_table();
  const Outcome o = invoke({"eval", "--table", table, "--element", R"({"h":[0],"k":2})"});
  CHECK(o.code == kExitOk);
  CHECK(o.out ==
        "{\"kind\":\"exact\",\"value\":\"1/2\",\"witness\":{\"coeffs\":{\"2\":1},\"residual\":[0],"
        "\"cost\":\"1/2\"},\"truncation_level\":9}\n");
  const Outcome interval = invoke({"eval", "--table", table, "--element", R"({"h":[0],"k":1})"});
  CHECK(interval.parsed()["kind"] == "interval");
  CHECK(interval.parsed()["lower"] == "1023/1024");
}

TEST_CASE("density") {
  const Outcome o = invoke({"density", "--table", built_table(), "--m", "5", "--j", "5"});
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["n"] == 41);
  CHECK(o.parsed()["holds"] == true);
}

TEST_CASE("verify") {
  const std::string table = built_table();
  const Outcome o = invoke({"verify", "--table", table, "--samples", "60"});
  CHECK(o.code == kExitOk);
  const json j = o.parsed();
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() == 4);
  CHECK_FALSE(j["reports"][0].contains("wall_ms"));

  const Outcome timed =
      invoke({"verify", "--table", table, "--suite", "extension", "--samples", "20", "--timing"});
  CHECK(timed.parsed()["reports"][0].contains("wall_ms"));
}

TEST_CASE("verify output is deterministic") {
  const std::string table = built_table();
  const std::vector<std::string> args = {"verify", "--table", table, "--samples", "40", "--seed", "9"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  const Outcome c = invoke(serial);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("counterexample") {
  const Outcome scan = invoke({"counterexample", "--grid", "50"});
  CHECK(scan.code == kExitOk);
  CHECK(scan.parsed()["certificates"] == 2500);
  CHECK(scan.parsed()["min_margin"] == "1251/1250");

  const Outcome lines = invoke({"counterexample", "--grid", "3", "--certificates", "-"});
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 10);

  const Outcome single =
      invoke({"counterexample", "--n", "2", "--m", "2", "--v1", "2/5", "--v2", "2/5"});
  CHECK(single.code == kExitOk);
  CHECK(single.parsed()["margin"] == "12/5");
  CHECK(single.parsed()["half_gap"] == "2/5");

  const Outcome bad = invoke({"counterexample", "--n", "1", "--m", "1", "--v1", "1/2", "--v2", "1/4"});
  CHECK(bad.code == kExitViolation);
  CHECK(bad.parsed()["error"] == "hypothesis_not_met");
}

TEST_CASE("family") {
  const std::string dir = temp_file("family");
  std::filesystem::create_directories(dir);
  const Outcome o = invoke({"family", "--group", kGroup, "--norms",
                            R"([{"type":"capped_l1","weights":["1"]},{"type":"capped_linf","scale":"3"},)"
                            R"({"type":"rational_rotation","alpha":"1/3"}])",
                            "--depth", "20", "--out-dir", dir});
  CHECK(o.code == kExitOk);
  const json j = o.parsed();
  CHECK(j["shared_identical"] == true);
  CHECK(j["members"].size() == 3);
  CHECK(j["members"][2]["pseudonorm"] == true);
  CHECK(j["members"][0]["pseudonorm"] == false);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "table_2.json"));
}

TEST_CASE("error exit codes") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"eval", "--bogus"}).code == kExitUsage);
  CHECK(invoke({"eval", "--table", temp_file("missing.json"), "--element", R"({"h":[0]})"}).code ==
        kExitUsage);
  CHECK(invoke({"build", "--group", R"({"free_rank":0})", "--norm", kNorm, "--out", temp_file("x.json")})
            .code == kExitUsage);

  const Outcome shallow =
      invoke({"eval", "--table", built_table(5), "--element", R"({"h":[0],"k":3})"});
  CHECK(shallow.code == kExitExtendTable);
  CHECK(shallow.parsed()["error"] == "extend_table");
  CHECK(shallow.parsed()["required_depth"] == 9);
  CHECK(invoke({"verify", "--table", built_table(10), "--suite", "density"}).code == kExitExtendTable);

  json doc;
  {
    std::ifstream in(built_table());
    in >> doc;
  }
  doc["anchors"][2]["k"] = "6";
  const std::string corrupted = temp_file("corrupted.json");
  std::ofstream(corrupted) << doc.dump();
  const Outcome c = invoke({"eval", "--table", corrupted, "--element", R"({"h":[0],"k":1})"});
  CHECK(c.code == kExitUsage);
  CHECK(c.err.find("corrupted table") != std::string::npos);

  CHECK(invoke({"eval", "--table", built_table(), "--element", R"({"h":[0],"k":1})", "--epsilon", "1"})
            .code == kExitUsage);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(MONO_CLI_PATH) + " counterexample --grid 4 > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(status == 0);
  const std::string bad = std::string(MONO_CLI_PATH) + " nonsense > /dev/null 2>&1";
  const int bad_status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(bad_status) == kExitUsage);
}
