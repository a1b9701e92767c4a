#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace fs = std::filesystem;
using weilhodge::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "weilhodge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / ("weilhodge_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (has_float(item)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("golden machine reports are reproduced byte for byte") {
  const fs::path golden(WEILHODGE_GOLDEN_DIR);
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"report_n2_qi.json", {"report", "--n", "2", "--e", "1", "--p", "2", "--format", "machine"}},
      {"report_n3_q-3.json", {"report", "--n", "3", "--e", "3", "--p", "3", "--format", "machine"}},
      {"report_n3_q2.json", {"report", "--n", "3", "--m", "2", "--e", "1", "--p", "3,1", "--format", "machine"}},
  };
  for (const auto& [file, args] : cases) {
    INFO(file);
    const Result r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(golden / file));
    const auto doc = nlohmann::json::parse(r.out);
    CHECK_FALSE(has_float(doc));
    CHECK(nlohmann::ordered_json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK(doc["passed"] == true);
  }
}

TEST_CASE("construct examples and exit codes") {
  const Result a = invoke({"construct", "--n", "2", "--e", "1", "--p", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("diag(-1, -1, 1, 1)") != std::string::npos);
  CHECK(a.out.find("(2, 2)") != std::string::npos);
  CHECK(a.out.find("discriminant: 1\n") != std::string::npos);

  const Result b = invoke({"construct", "--n", "3", "--m", "2", "--e", "1", "--p", "3,1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("witness sqrt(2)") != std::string::npos);

  const Result c = invoke({"construct", "--n", "3", "--e", "1", "--p", "2"});
  CHECK(c.code == 2);
  CHECK(c.out.empty());
  CHECK(c.err.find("parity") != std::string::npos);

  // Override mode runs, and the failed rationality check gives exit 1.
  const Result d = invoke({"construct", "--n", "3", "--e", "1", "--p", "2", "--override-weil"});
  CHECK(d.code == 1);
  CHECK(d.out.find("warning") != std::string::npos);
  CHECK(d.out.find("not a square") != std::string::npos);

  const Result e = invoke({"construct", "--n", "3", "--m", "2", "--e", "1", "--p", "3,1", "--format", "machine"});
  CHECK(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["command"] == "construct");
  CHECK(doc["rationality"]["witness"]["b"] == "1/1");
  CHECK_FALSE(has_float(doc));
}

TEST_CASE("hodge examples") {
  const Result a = invoke({"hodge", "--n", "3", "--p", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("1 9 9 1") != std::string::npos);
  CHECK(a.out.find("level 3") != std::string::npos);

  const Result b = invoke({"hodge", "--n", "3", "--p", "3,1"});
  CHECK(b.out.find("1 19 19 1") != std::string::npos);

  const Result c = invoke({"hodge", "--n", "5", "--p", "5", "--format", "machine"});
  CHECK(c.code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["combined"]["numbers"] == nlohmann::json::array({1, 25, 100, 100, 25, 1}));
  CHECK(doc["combined"]["total"] == 252);
  CHECK(doc["calabi_yau"] == true);

  CHECK(invoke({"hodge", "--n", "3", "--p", "7", "--override-weil"}).code == 2);
  CHECK(invoke({"hodge", "--n", "3", "--p", "3,2", "--override-weil"}).code == 2);  // n - p odd
  CHECK(invoke({"hodge", "--n", "31", "--p", "31"}).code == 2);
}

TEST_CASE("verify and report") {
  const Result a = invoke({"verify", "--n", "1", "--e", "1", "--p", "1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);

  const Result b = invoke({"report", "--n", "2", "--e", "1", "--p", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("h^{n,0} = 1") != std::string::npos);
  CHECK(b.out.find("\033[") == std::string::npos);

  // Parity-violating override run: verification fails with exit 1.
  const Result c = invoke({"verify", "--n", "3", "--m", "2", "--e", "1", "--p", "3,2", "--override-weil"});
  CHECK(c.code == 1);
  CHECK(c.out.find("rationality_criterion") != std::string::npos);

  CHECK(invoke({"verify", "--n", "4", "--e", "1", "--p", "4"}).code == 2);
  CHECK(invoke({"verify", "--n", "2", "--m", "2", "--e", "1", "--p", "2"}).code == 2);  // degree mismatch
  CHECK(invoke({"report", "--n", "2", "--m", "4", "--e", "1", "--p", "2,2"}).code == 2);  // m not square-free
}

TEST_CASE("machine reports are deterministic and echo the seed") {
  const std::vector<std::string> args{"report", "--n", "2", "--e", "3", "--p", "2", "--seed", "17", "--format",
                                      "machine"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["input"]["seed"] == 17);
  CHECK(doc["lie_equivariance"]["seed"] == 17);
}

TEST_CASE("config files, with flags taking precedence") {
  const auto cfg = temp_file("ok.json", R"({"n": 3, "m": 2, "e": "1", "p": [3, 1], "seed": 1})");
  const Result a = invoke({"report", "--config", cfg.string(), "--format", "machine"});
  CHECK(a.code == 0);
  CHECK(a.out == read_file(fs::path(WEILHODGE_GOLDEN_DIR) / "report_n3_q2.json"));

  const auto cfg2 = temp_file("override.json", R"({"n": 2, "e": 5, "p": "2"})");
  const Result b = invoke({"construct", "--config", cfg2.string(), "--e", "1", "--format", "machine"});
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["input"]["e"] == "1/1");

  const auto out = fs::temp_directory_path() / "weilhodge_test_out.json";
  const Result c = invoke({"hodge", "--n", "2", "--p", "2", "--format", "machine", "--out", out.string()});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  CHECK(nlohmann::json::parse(read_file(out))["combined"]["numbers"] == nlohmann::json::array({1, 4, 1}));
}

TEST_CASE("malformed input never crashes and exits 2 with no output") {
  const std::vector<std::string> bad_configs{
      "{not json",
      "[1, 2, 3]",
      R"({"n": "three", "p": [3]})",
      R"({"n": 3, "p": [3], "colour": true})",
      R"({"n": 3, "p": []})",
      R"({"n": 3, "p": [3], "e": 1.5})",
      R"({"n": 3, "p": [3], "e": "1/0"})",
      R"({"n": 3, "p": [3], "e": "-2"})",
      R"({"n": 3, "p": [3], "seed": -1})",
      R"({"n": 99999999999999999999, "p": [3]})",
      R"({"n": 3, "p": [3], "override_weil": "yes"})",
      R"({"n": 0, "p": [0]})",
      std::string("\x00\xff\xfe", 3),
  };
  int k = 0;
  for (const auto& text : bad_configs) {
    const auto path = temp_file("bad" + std::to_string(k++) + ".json", text);
    for (const char* cmd : {"construct", "hodge", "verify", "report"}) {
      INFO(cmd << " with config " << text);
      const Result r = invoke({cmd, "--config", path.string()});
      CHECK(r.code == 2);
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }
  CHECK(invoke({"report", "--config", "/nonexistent/weilhodge.json"}).code == 2);
  CHECK(invoke({"construct", "--n", "2", "--p", "2,"}).code == 2);
  CHECK(invoke({"construct", "--n", "2", "--p", "x"}).code == 2);
  CHECK(invoke({"construct", "--n", "2"}).code == 2);
  CHECK(invoke({"construct", "--p", "2"}).code == 2);
  CHECK(invoke({"construct", "--n", "2", "--p", "2", "--format", "yaml"}).code == 2);
  CHECK(invoke({"construct", "--n", "abc", "--p", "2"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
