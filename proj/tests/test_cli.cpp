#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vnum/cli.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kGolden = VNUM_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vnum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string in(const std::string& name) { return (kGolden / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// VNUM_UPDATE_GOLDEN=1 rewrites the expected files instead of comparing.
void golden(const std::string& name, const std::string& actual) {
  const auto path = kGolden / name;
  if (std::getenv("VNUM_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  REQUIRE(fs::exists(path));
  CHECK(slurp(path) == actual);
}

struct Case {
  const char* file;
  std::vector<std::string> args;
  int code;
};

} // namespace

TEST_CASE("golden reports") {
  const std::vector<Case> cases{
      {"ass_worked.out", {"ass", "-i", in("worked.txt"), "--max-power", "6"}, 0},
      {"v_worked.out", {"v", "-i", in("worked.txt")}, 0},
      {"v_worked_machine.out", {"v", "-i", in("worked.json"), "--format", "machine"}, 0},
      {"vp_worked.out", {"vp", "-i", in("worked.txt"), "--bruteforce"}, 0},
      {"vp_three.out", {"vp", "-i", in("three.txt"), "--prime", "x,y"}, 0},
      {"vfun_worked.out", {"vfun", "-i", in("worked.txt"), "--max-power", "8"}, 0},
      {"vfun_worked_machine.out", {"vfun", "-i", in("worked.txt"), "--max-power", "4", "--format", "machine"}, 0},
      {"verify_family31.out", {"verify", "-i", in("family31.txt"), "--max-power", "12"}, 0},
      {"verify_worked_machine.out", {"verify", "-i", in("worked.txt"), "--max-power", "8", "--format", "machine"}, 0},
      {"verify_three.out", {"verify", "-i", in("three.txt"), "--max-power", "8"}, 0},
      {"verify_short.out", {"verify", "-i", in("worked.txt"), "--max-power", "3"}, 3},
      {"twovar_worked.out", {"twovar", "-i", in("worked.txt"), "--max-power", "5"}, 0},
      {"family_2_0.out", {"family", "--slope", "2", "--intercept", "0", "--max-power", "6"}, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    auto r = run(c.args);
    CHECK(r.code == c.code);
    golden(c.file, r.out);
    auto again = run(c.args);
    CHECK(again.out == r.out);
  }
}

TEST_CASE("vfun writes the CSV table") {
  const auto csv = fs::temp_directory_path() / "vnum_test_vfun.csv";
  auto r = run({"vfun", "-i", in("worked.txt"), "--max-power", "8", "--csv", csv.string()});
  CHECK(r.code == 0);
  golden("vfun_worked.csv", slurp(csv));
  fs::remove(csv);
  auto f = run({"family", "--slope", "3", "--intercept", "1", "--max-power", "5", "--csv", csv.string()});
  CHECK(f.code == 0);
  golden("family_3_1.csv", slurp(csv));
  fs::remove(csv);
}

TEST_CASE("v on the worked example prints 5") {
  auto r = run({"v", "-g", "x^5, x^4*y^3, x^2*y^4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("v(I) = 5\n") != std::string::npos);
}

TEST_CASE("input problems exit with 2") {
  CHECK(run({"v"}).code == 2);
  CHECK(run({"v", "-i", in("does_not_exist.txt")}).code == 2);
  auto bad = run({"v", "-g", "x^2, x*q", "--vars", "x, y"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown variable 'q' at column 6") != std::string::npos);
  CHECK(run({"v", "-g", "x^2", "-i", in("worked.txt")}).code == 2);
  CHECK(run({"v", "-g", "1"}).code == 2);
  CHECK(run({"vp", "-i", in("worked.txt"), "--prime", "y"}).code == 2);
  CHECK(run({"family", "--slope", "0", "--intercept", "1"}).code == 2);
  CHECK(run({"verify", "-i", in("worked.txt"), "--max-power", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"v", "-i", in("worked.txt"), "--format", "xml"}).code == 2);
}

TEST_CASE("non-minimal input warns on stderr") {
  auto r = run({"v", "-g", "x^2, x^3"});
  CHECK(r.code == 0);
  CHECK(r.err == "warning: input generators are not minimal: 2 given, 1 minimal\n");
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
