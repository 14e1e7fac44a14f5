// Exit-code contract of the command-line tool: 0 success, 1 internal,
// 2 usage/validation, 3 property violation. Driven through the real
// binary; the path arrives in AIRSLOT_CLI_BIN (set by ctest).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("AIRSLOT_CLI_BIN");
  return p ? p : "";
}

int run(const std::string& args, const std::string& extra_env = "") {
  std::string command = extra_env + cli_path() + " " + args + " > /dev/null 2>&1";
  int status = std::system(command.c_str());
  return status < 0 ? -1 : WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "airslot_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli exit-code contract") {
  if (cli_path().empty()) {
    MESSAGE("AIRSLOT_CLI_BIN not set; skipping CLI contract tests");
    return;
  }

  fs::path scenario = fresh_dir("scenario");
  REQUIRE(run("synth --movements 12 --slots 4 --capacity 4 --seed 3 --g 50 --out " +
              scenario.string()) == 0);

  SUBCASE("allocate succeeds and writes the three result files") {
    fs::path out = fresh_dir("out");
    CHECK(run("allocate --scenario " + scenario.string() + " --out " + out.string()) == 0);
    CHECK(fs::exists(out / "allocation.json"));
    CHECK(fs::exists(out / "payments.csv"));
    CHECK(fs::exists(out / "metrics.json"));
  }

  SUBCASE("broken csv exits 2 and names the file") {
    fs::path broken = fresh_dir("broken");
    fs::copy(scenario, broken, fs::copy_options::recursive | fs::copy_options::overwrite_existing);
    std::ofstream(broken / "slots.csv") << "slot_id,capacity\n0,nope\n";
    fs::path out = fresh_dir("out_broken");
    std::string err_file = (out / "err.txt").string();
    std::string command = cli_path() + " allocate --scenario " + broken.string() + " --out " +
                          out.string() + " 2> " + err_file + " > /dev/null";
    int status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::ifstream err(err_file);
    std::string text((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
    CHECK(text.find("slots.csv:2") != std::string::npos);
  }

  SUBCASE("unwritable output directory exits 1") {
    CHECK(run("allocate --scenario " + scenario.string() + " --out /dev/null/nested") == 1);
  }

  SUBCASE("usage errors exit 2") {
    CHECK(run("allocate") == 2);                    // missing required flags
    CHECK(run("verify --trials 0") == 2);           // positive count required
    CHECK(run("frobnicate") == 2);                  // unknown subcommand
  }

  SUBCASE("verify exits 0 on healthy runs and 3 under fault injection") {
    CHECK(run("verify --trials 10 --misreports 6") == 0);
    CHECK(run("verify --trials 10 --misreports 6", "AIRSLOT_VERIFY_FAULT=1 ") == 3);
  }

  SUBCASE("sweep emits one row per (g, method)") {
    fs::path out = fresh_dir("out_sweep");
    CHECK(run("sweep --scenario " + scenario.string() + " --g 10,20,30,40 --out " + out.string()) ==
          0);
    std::ifstream sweep(out / "sweep.csv");
    int lines = 0;
    std::string line;
    while (std::getline(sweep, line)) ++lines;
    CHECK(lines == 1 + 4 * 3);
  }
}
