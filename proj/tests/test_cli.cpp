#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "mtc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mtc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mtc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MTC_SOURCE_DIR) + "/data/" + name; }

}  // namespace

TEST_CASE("validate exit codes", "[cli]") {
  CHECK(run({"validate", "catalog:haagerup-center"}).code == 0);
  CHECK(run({"validate", data("toric-code.mtc")}).code == 0);
  const auto bad = run({"validate", data("toric-code-bad-twist.mtc")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate", "catalog:nope"}).code == 2);
  CHECK(run({"validate", "/nonexistent.mtc"}).code == 2);
  CHECK(run({"report", "catalog:toric-code", "--object", "q"}).code == 2);
  CHECK(run({"indicators", "catalog:toric-code", "--n", "4", "--k", "2"}).code == 2);
  CHECK(run({"braid", "catalog:toric-code", "--object", "e", "--n", "2", "--l", "2"}).code == 2);
  CHECK(run({"validate", "catalog:vec", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data that are not modular fail before any computation", "[cli]") {
  CHECK(run({"report", data("toric-code-bad-twist.mtc"), "--object", "e"}).code == 1);
}

TEST_CASE("report output", "[cli]") {
  const auto r = run({"report", "catalog:haagerup-center", "--object", "x6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("x6 ⊗ x6 = x1 ⊕ 2x2 ⊕ x3") != std::string::npos);
  CHECK(r.out.find("8 | (-e^{20πi/39}, e^{20πi/39}) | (1,0)") != std::string::npos);
  CHECK(r.out.find("6 | (-e^{πi/3}, e^{πi/3}) | (2,0)") != std::string::npos);
  const auto s = run({"report", "catalog:haagerup-center", "--object", "x6", "--format", "structured"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"schema\": \"mtc-spectrum/1\"") != std::string::npos);
}

TEST_CASE("the same input gives the same bytes", "[cli]") {
  const std::vector<std::string> args = {"rotation", "catalog:toric-code", "--object", "f", "--n", "3"};
  const auto a = run(args);
  auto par = args;
  par.insert(par.end(), {"--jobs", "4"});
  const auto b = run(par);
  const auto c = run(par);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

TEST_CASE("every command runs on the file form", "[cli]") {
  const auto f = data("fibonacci.mtc");
  CHECK(run({"fusion", f}).code == 0);
  CHECK(run({"fusion", f, "--object", "tau", "--n", "3"}).out.find("1 ⊕ 2tau") != std::string::npos);
  CHECK(run({"indicators", f, "--n", "3", "--k", "1", "--format", "structured"}).code == 0);
  CHECK(run({"rotation", f, "--object", "tau", "--n", "4", "--center-object", "(1,1)"}).code == 0);
  CHECK(run({"braid", f, "--object", "tau", "--n", "3", "--l", "1", "--under"}).code == 0);
  CHECK(run({"report", f, "--object", "tau", "--braid-sigma3"}).code == 0);
}

TEST_CASE("output can go to a file", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "mtc_cli_test.json";
  const auto r = run({"report", "catalog:semion", "--object", "s", "--format", "structured", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
}
