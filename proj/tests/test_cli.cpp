#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "whakit/bundle.hpp"
#include "whakit/cli.hpp"

using namespace whakit;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = WHAKIT_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Runs every case in a scratch working directory.
struct ScratchDir {
  fs::path previous = fs::current_path();
  fs::path dir;
  ScratchDir() {
    dir = fs::temp_directory_path() / ("whakit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::current_path(dir);
  }
  ~ScratchDir() {
    fs::current_path(previous);
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("corrupted fixtures give the expected exit code and check") {
    ScratchDir scratch;
    const auto cases = nlohmann::json::parse(read_file(kFixtures / "corrupted" / "expected.json"));
    REQUIRE(cases.size() >= 8);
    for (const auto& c : cases) {
      const std::string file = c["file"];
      INFO(file);
      std::vector<std::string> args = c["command"];
      args.push_back((kFixtures / "corrupted" / file).string());
      const Run r = run(args);
      CHECK(r.code == c["exit"].get<int>());
      const std::string check = c["check"];
      if (!check.empty()) CHECK(r.out.find("first failure: ") != std::string::npos);
      if (!check.empty()) CHECK(r.out.find(": " + check) != std::string::npos);
    }
  }

  TEST_CASE("passing commands") {
    ScratchDir scratch;
    CHECK(run({"check", (kFixtures / "face_3.json").string()}).code == 0);
    CHECK(run({"check", "sweedler"}).code == 0);
    CHECK(run({"galois", "check", (kFixtures / "A_2.json").string()}).code == 0);
    CHECK(run({"autoequiv-test", (kFixtures / "A_2.json").string()}).code == 0);
    CHECK(run({"autoequiv-test", (kFixtures / "A_m1.json").string(), "--probe", "regular"}).code == 0);
    CHECK(run({"yd-roundtrip", "face:2", "--samples", "rh,unit"}).code == 0);
    CHECK(run({"yd-roundtrip", "face:2", "--samples", (kFixtures / "module_yd_face_2.json").string()}).code == 0);
    CHECK(run({"braiding-check", "sweedler", "--seed", "3"}).code == 0);
    CHECK(run({"face-check", "--n", "2"}).code == 0);
  }

  TEST_CASE("emitted bundles equal the fixtures") {
    ScratchDir scratch;
    REQUIRE(run({"face", "--n", "2", "-o", "face_2.json"}).code == 0);
    CHECK(read_file("face_2.json") == read_file(kFixtures / "face_2.json"));
    REQUIRE(run({"transmute", "face:3", "-o", "rh.json"}).code == 0);
    CHECK(read_file("rh.json") == read_file(kFixtures / "rh_face_3.json"));
    REQUIRE(run({"face-galois", "--n", "2", "--param", "2", "-o", "a.json"}).code == 0);
    CHECK(read_file("a.json") == read_file(kFixtures / "A_2.json"));
    // Without -o the bundle goes to stdout and the report to stderr.
    const Run r = run({"face", "--n", "2"});
    CHECK(r.out == read_file(kFixtures / "face_2.json"));
    CHECK(r.err.find("PASSED") != std::string::npos);
  }

  TEST_CASE("cotensor product of cocycle objects") {
    ScratchDir scratch;
    const Run r = run({"cotensor", (kFixtures / "A_2.json").string(), (kFixtures / "A_m1.json").string(), "-o",
                       "prod.json"});
    CHECK(r.code == 0);
    CHECK(run({"galois", "check", "prod.json"}).code == 0);
    const Run mixed = run({"cotensor", (kFixtures / "A_2.json").string(),
                           (kFixtures / "object_rh_sweedler.json").string()});
    CHECK(mixed.code == 2);
  }

  TEST_CASE("reports are deterministic and recorded") {
    ScratchDir scratch;
    REQUIRE(run({"braiding-check", "face:2", "--seed", "5", "--format", "json"}).code == 0);
    const std::string first = run({"report"}).out;
    run({"braiding-check", "face:2", "--seed", "5", "--format", "json"});
    CHECK(run({"report"}).out == first);
    const auto doc = nlohmann::json::parse(first);
    CHECK(doc["tool"] == "whakit");
    CHECK(doc["seed"] == 5);
    CHECK(doc["passed"] == true);
    CHECK(doc["inputs"][0]["name"] == "catalog:face:2");
    CHECK(doc["inputs"][0]["sha256"].get<std::string>().size() == 64);
    CHECK(doc["reports"].size() >= 2);
  }

  TEST_CASE("usage errors") {
    ScratchDir scratch;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"face", "--n", "1"}).code == 2);
    CHECK(run({"face-galois", "--n", "2", "--param", "0"}).code == 2);
    CHECK(run({"face-galois", "--n", "2", "--param", "1", "--component", "2"}).code == 2);
    CHECK(run({"check", "sweedler", "--format", "yaml"}).code == 2);
    CHECK(run({"report"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}
