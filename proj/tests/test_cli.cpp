#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "wignerlab/results_io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "wignerlab_cli_test";

int run(const std::string& args, const std::string& stdout_file = "") {
  const std::string redirect = stdout_file.empty() ? " >/dev/null" : " >" + (kScratch / stdout_file).string();
  const std::string cmd = std::string(WIGNERLAB_CLI) + " " + args + redirect + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& name) { return wignerlab::read_text_file(kScratch / name); }

std::string at(const std::string& name) { return (kScratch / name).string(); }

}  // namespace

TEST_CASE("CLI exit codes and outputs") {
  fs::create_directories(kScratch);

  SUBCASE("check passes") {
    CHECK(run("check", "check.txt") == 0);
    const std::string text = slurp("check.txt");
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
  }
  SUBCASE("regularity prints the Gaussian identities") {
    CHECK(run("regularity --dist gaussian", "reg.txt") == 0);
    const std::string text = slurp("reg.txt");
    CHECK(text.find("I6=119.99999") != std::string::npos);
    CHECK(text.find("I4=11.99999") != std::string::npos);
    CHECK(text.find("I2pp=7.99999") != std::string::npos);
  }
  SUBCASE("dos writes deterministic CSV") {
    const std::string args = "dos --n 64 --samples 200 --energy 0 --eta-over-n 2 --seed 42 --out ";
    CHECK(run(args + at("a.csv")) == 0);
    CHECK(run(args + at("b.csv") + " --threads 3") == 0);
    CHECK(slurp("a.csv") == slurp("b.csv"));
    CHECK(wignerlab::parse_csv(slurp("a.csv")).size() == 1);
  }
  SUBCASE("spec file with flag override, JSON output and plot") {
    wignerlab::write_text_file(kScratch / "spec.json",
                               R"({"kind":"scale_sweep","n":[16,32],"samples":20,"energy":0,"eta_over_n":[4,1],"seed":3})");
    CHECK(run("sweep --spec " + at("spec.json") + " --samples 10 --out " + at("sweep.json") + " --plot") == 0);
    const auto j = nlohmann::json::parse(slurp("sweep.json"));
    CHECK(j["spec"]["samples"] == 10);
    CHECK(j["rows"].size() == 4);
    CHECK(fs::exists(kScratch / "sweep.svg"));
  }
  SUBCASE("diagnostics emits a JSON record") {
    CHECK(run("diagnostics --n 32 --j 3 --energy 0.1 --eps 0.5 --seed 1", "diag.json") == 0);
    const auto j = nlohmann::json::parse(slurp("diag.json"));
    CHECK(j["j"] == 3);
    CHECK(j["xi"].size() == 31);
  }
  SUBCASE("every experiment subcommand runs") {
    CHECK(run("stieltjes --n 16 --samples 5") == 0);
    CHECK(run("wegner --n 16 --samples 5 --eta-over-n 1 0.1") == 0);
    CHECK(run("deriv --n 16 --samples 5 --eta-over-n 0.5") == 0);
    CHECK(run("spacing --n 64 --samples 5") == 0);
    CHECK(run("delta --n 32 --samples 5") == 0);
  }
  SUBCASE("usage and configuration errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("dos --bogus") == 2);
    CHECK(run("dos --n abc") == 2);
    CHECK(run("dos --eta -1") == 2);
    CHECK(run("dos --samples 0") == 2);
    CHECK(run("dos --energy 1.9") == 2);
    CHECK(run("dos --dist cauchy") == 2);
    CHECK(run("dos --format xml") == 2);
    CHECK(run("dos --spec /nonexistent/spec.json") == 2);
    CHECK(run("deriv --eta-over-n 3") == 2);
    CHECK(run("diagnostics --n 10 --j 10") == 2);
    CHECK(run("diagnostics --eps 2") == 2);
    wignerlab::write_text_file(kScratch / "wrong.json", R"({"kind":"wegner"})");
    CHECK(run("dos --spec " + at("wrong.json")) == 2);
    wignerlab::write_text_file(kScratch / "broken.json", "{not json");
    CHECK(run("dos --spec " + at("broken.json")) == 2);
  }
  SUBCASE("runtime failures exit 1") {
    CHECK(run("dos --n 8 --samples 2 --out /nonexistent/dir/r.csv") == 1);
  }
}
