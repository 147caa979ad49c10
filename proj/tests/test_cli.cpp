#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamglass/cli.hpp"

using namespace lamglass;
namespace fs = std::filesystem;

namespace {

const std::string kBench = std::string(LAMGLASS_SOURCE_DIR) + "/data/bench.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lamglass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("lamglass_cli_" + std::to_string(::getpid()) + "_" + std::to_string(++counter));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

nlohmann::json bench_document() {
  std::ifstream in(kBench);
  return nlohmann::json::parse(in);
}

void write(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  file << text;
}

std::string read(const std::string& path) {
  std::ifstream file(path);
  std::stringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("solve the shipped benchmark document") {
  const auto r = run_cli({"solve", "--model", kBench});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.empty());
  CHECK(r.out.find("Midspan deflection          2.00 mm") != std::string::npos);
  CHECK(r.out.find("Monolithic bound            0.99 mm") != std::string::npos);
  CHECK(r.out.find("Independent bound           3.97 mm") != std::string::npos);
}

TEST_CASE("element override changes the discretisation") {
  const auto coarse = run_cli({"solve", "--model", kBench, "--elements", "4", "--format", "csv"});
  REQUIRE(coarse.code == cli::kOk);
  const auto rows = parse_csv(coarse.out);
  REQUIRE(rows.size() == 6);  // header + 5 nodes
  // Regression value of the 4-element model from the independent dense solve.
  CHECK(std::stod(rows[3][1]) == doctest::Approx(1.9391724779023312).epsilon(1e-10));

  const auto fine = run_cli({"solve", "--model", kBench, "--format", "csv"});
  const auto fine_rows = parse_csv(fine.out);
  CHECK(std::stod(fine_rows[31][1]) != doctest::Approx(std::stod(rows[3][1])).epsilon(1e-3));

  SUBCASE("count that moves a load off a node is rejected") {
    CHECK(run_cli({"solve", "--model", kBench, "--elements", "7"}).code == cli::kValidation);
  }
  SUBCASE("count below two is a usage error") {
    CHECK(run_cli({"solve", "--model", kBench, "--elements", "1"}).code == cli::kUsageOrIo);
  }
}

TEST_CASE("solution CSV layout") {
  TempDir dir;
  const auto path = dir.file("solution.csv");
  const auto r = run_cli({"solve", "--model", kBench, "--out", path});
  REQUIRE(r.code == cli::kOk);
  const auto rows = parse_csv(read(path));
  REQUIRE(rows.size() == 62);
  // x, w, five fields for each of three layers, one traction per interface.
  CHECK(rows[0].size() == 2 + 5 * 3 + 2);
  CHECK(rows[0][0] == "x_m");
  CHECK(rows[0][1] == "w_mm");
  CHECK(rows[0].back() == "t2_kPa");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == rows[0].size());
  CHECK(std::stod(rows[1][0]) == 0.0);
  CHECK(std::stod(rows[61][0]) == doctest::Approx(0.8));
  CHECK(std::stod(rows[31][1]) == doctest::Approx(2.0048704746721766).epsilon(1e-12));
  // Text still goes to standard output.
  CHECK(r.out.find("Midspan deflection") != std::string::npos);
}

TEST_CASE("error exit codes") {
  TempDir dir;

  SUBCASE("missing file") {
    const auto r = run_cli({"solve", "--model", dir.file("nope.json")});
    CHECK(r.code == cli::kUsageOrIo);
    CHECK(r.err.find("nope.json") != std::string::npos);
  }
  SUBCASE("unknown subcommand") { CHECK(run_cli({"frobnicate"}).code == cli::kUsageOrIo); }
  SUBCASE("no subcommand") { CHECK(run_cli({}).code == cli::kUsageOrIo); }
  SUBCASE("malformed JSON") {
    write(dir.file("bad.json"), "{ \"section\": ");
    CHECK(run_cli({"solve", "--model", dir.file("bad.json")}).code == cli::kValidation);
  }
  SUBCASE("invalid document") {
    auto doc = bench_document();
    doc["section"]["layers"][1]["nu"] = 0.6;
    write(dir.file("nu.json"), doc.dump());
    const auto r = run_cli({"solve", "--model", dir.file("nu.json")});
    CHECK(r.code == cli::kValidation);
    CHECK(r.err.find("layer 2 Poisson") != std::string::npos);
  }
  SUBCASE("singular model") {
    auto doc = bench_document();
    doc["supports"].erase(2);
    write(dir.file("free.json"), doc.dump());
    const auto r = run_cli({"solve", "--model", dir.file("free.json")});
    CHECK(r.code == cli::kSingular);
    CHECK(r.err.find("singular") != std::string::npos);
  }
  SUBCASE("unwritable output") {
    CHECK(run_cli({"solve", "--model", kBench, "--out", dir.file("missing/dir/x.csv")}).code == cli::kUsageOrIo);
  }
}

TEST_CASE("bench") {
  const auto a = run_cli({"bench"});
  const auto b = run_cli({"bench"});
  CHECK(a.out == b.out);
  // The reference deflections are not reproduced at L = 0.8 m.
  CHECK(a.code == cli::kToleranceFailure);
  CHECK(a.out.find("[PASS] monolithic bound") != std::string::npos);
  CHECK(a.out.find("[PASS] independent bound") != std::string::npos);
  CHECK(a.out.find("[PASS] bracketing") != std::string::npos);
  CHECK(a.out.find("+57.9") != std::string::npos);

  TempDir dir;
  const auto r = run_cli({"bench", "--format", "csv", "--out", dir.file("bench.csv")});
  CHECK(r.out == read(dir.file("bench.csv")));
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0][0] == "load_N");
  CHECK(std::stod(rows[1][1]) == doctest::Approx(2.0048704746721766).epsilon(1e-12));
  CHECK(std::stod(rows[4][1]) == doctest::Approx(4.0 * 2.0048704746721766).epsilon(1e-12));
}

TEST_CASE("converge") {
  SUBCASE("rows come out sorted") {
    const auto r = run_cli({"converge", "--model", kBench, "--elements", "60,4,20", "--format", "csv"});
    REQUIRE(r.code == cli::kOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n_elements", "w_mid_mm"});
    CHECK(rows[1][0] == "4");
    CHECK(rows[2][0] == "20");
    CHECK(rows[3][0] == "60");
    CHECK(std::stod(rows[1][1]) == doctest::Approx(1.9391724779023312).epsilon(1e-10));
    CHECK(std::stod(rows[3][1]) == doctest::Approx(2.0048704746721766).epsilon(1e-12));
    CHECK(std::stod(rows[1][1]) < std::stod(rows[2][1]));
    CHECK(std::stod(rows[2][1]) < std::stod(rows[3][1]));
  }
  SUBCASE("single count") {
    const auto r = run_cli({"converge", "--model", kBench, "--elements", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("elements") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  }
  SUBCASE("invalid count") {
    CHECK(run_cli({"converge", "--model", kBench, "--elements", "0"}).code == cli::kUsageOrIo);
    CHECK(run_cli({"converge", "--model", kBench, "--elements", "abc"}).code == cli::kUsageOrIo);
    CHECK(run_cli({"converge", "--model", kBench, "--elements", "9"}).code == cli::kValidation);
  }
}
