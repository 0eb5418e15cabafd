#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hardimer/cli.hpp"
#include "json.hpp"

using namespace hardimer;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hardimer_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify") {
  const Result ok = run_cli({"verify", "--max-n", "12"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("N=12 pairs=354294") != std::string::npos);

  const Result two = run_cli({"verify", "--max-n", "2"});
  CHECK(two.code == cli::kSuccess);
  CHECK(two.out.find("N=1 pairs=2 expected=2") != std::string::npos);
  CHECK(two.out.find("N=2 pairs=6 expected=6") != std::string::npos);

  CHECK(run_cli({"verify", "--max-n", "0"}).code == cli::kUsageError);
  CHECK(run_cli({"verify", "--max-n", "15"}).code == cli::kResourceError);
  CHECK(run_cli({"verify"}).code == cli::kUsageError);
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"--help"}).code == cli::kSuccess);
}

TEST_CASE("pmf csv and json") {
  const Result st = run_cli({"pmf", "--n", "2", "--coords", "st"});
  CHECK(st.code == 0);
  CHECK(st.out.find("joint,0,0,2/3,") != std::string::npos);
  CHECK(st.out.find("joint,1,2,1/3,") != std::string::npos);
  CHECK(st.out.find("total,,,1/1,1") != std::string::npos);

  const Result sk = run_cli({"pmf", "--n", "3", "--coords", "sk"});
  CHECK(sk.out.find("joint,1,2,4/9,") != std::string::npos);
  CHECK(sk.out.find("marginal_k,") != std::string::npos);

  for (int n : {1, 7, 40}) {
    const Result r = run_cli({"pmf", "--n", std::to_string(n), "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["total"] == "1/1");
    CHECK(doc["joint"].size() > 0);
  }
  const Result fl = run_cli({"pmf", "--n", "30", "--float", "--format", "json"});
  CHECK(nlohmann::json::parse(fl.out)["total_decimal"].get<double>() == doctest::Approx(1.0));

  CHECK(run_cli({"pmf", "--n", "2", "--coords", "xy"}).code == cli::kUsageError);
  CHECK(run_cli({"pmf", "--n", "0"}).code == cli::kUsageError);

  const fs::path dir = scratch("pmf");
  const fs::path file = dir / "pmf.csv";
  CHECK(run_cli({"pmf", "--n", "5", "--out", file.string()}).code == 0);
  CHECK(fs::exists(file));
  const auto manifest = cli::RunManifest::from_json(nlohmann::json::parse(slurp(cli::manifest_path(file))));
  CHECK(manifest.command == "pmf");
  CHECK(manifest.parameters["n"] == 5);
  CHECK(manifest.tool_version == std::string(cli::kToolVersion));
}

TEST_CASE("moments") {
  const Result r = run_cli({"moments", "--from", "2", "--to", "5"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row2, row3, row4, row5;
  std::getline(lines, header);
  std::getline(lines, row2);
  std::getline(lines, row3);
  std::getline(lines, row4);
  std::getline(lines, row5);
  CHECK(header.rfind("N,E_s_exact,E_s_asymptotic,Var_s_exact,Var_s_asymptotic", 0) == 0);
  CHECK(row2.rfind("2,1/3,1/3,", 0) == 0);
  CHECK(row5.rfind("5,1/1,1/1,32/81,32/81,", 0) == 0);

  CHECK(run_cli({"moments", "--from", "5", "--to", "4"}).code == cli::kUsageError);
  CHECK(run_cli({"moments", "--from", "0", "--to", "4"}).code == cli::kUsageError);
}

TEST_CASE("sample output is deterministic") {
  const fs::path dir = scratch("sample");
  const fs::path a = dir / "a.csv", b = dir / "b.csv";
  CHECK(run_cli({"sample", "--n", "1", "--m", "3", "--seed", "9", "--out", a.string()}).code == 0);
  const std::string one = slurp(a);
  CHECK(one.rfind("n_b,n_r,n_br,gamma_b,gamma_r\n", 0) == 0);
  std::istringstream rows(one);
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    ++count;
    CHECK((line == "0,0,0,1,0" || line == "0,0,0,0,1"));
  }
  CHECK(count == 3);

  CHECK(run_cli({"sample", "--n", "30", "--m", "5000", "--seed", "4", "--out", a.string()}).code == 0);
  CHECK(run_cli({"--threads", "3", "sample", "--n", "30", "--m", "5000", "--seed", "4", "--out",
                 b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));

  const auto manifest = nlohmann::json::parse(slurp(cli::manifest_path(a)));
  CHECK(manifest["seed"] == 4);
  CHECK(manifest["rng_algorithm"].get<std::string>().find("mt19937_64") != std::string::npos);
  CHECK(run_cli({"sample", "--n", "3", "--m", "0", "--seed", "1"}).code == cli::kUsageError);
}

TEST_CASE("sample uses the output directory from the environment") {
  const fs::path dir = scratch("env");
  ::setenv(cli::kOutputDirEnv, dir.string().c_str(), 1);
  const Result r = run_cli({"sample", "--n", "10", "--m", "2000", "--seed", "3", "--aggregate"});
  ::unsetenv(cli::kOutputDirEnv);
  CHECK(r.code == 0);
  const fs::path file = dir / "sample_n10_m2000_seed3_hist.csv";
  REQUIRE(fs::exists(file));
  CHECK(slurp(file).rfind("s,k,count,frequency_decimal\n", 0) == 0);
  CHECK(fs::exists(cli::manifest_path(file)));
}

TEST_CASE("clt") {
  const fs::path dir = scratch("clt");
  const Result r = run_cli({"clt", "--n", "100,400", "--out-dir", dir.string()});
  CHECK(r.code == 0);
  const auto summary = nlohmann::json::parse(slurp(dir / "clt_summary.json"));
  CHECK(summary["runs"].size() == 2);
  CHECK(summary["monotone"]["sup_error"] == true);
  CHECK(summary["runs"][0]["sup_error"].get<double>() == doctest::Approx(3.762184584831086));
  CHECK(slurp(dir / "clt_n100.csv").rfind("s,k,x,y,exact_pmf,gauss_mass,rel_err\n", 0) == 0);
  CHECK(fs::exists(cli::manifest_path(dir / "clt_n400.csv")));

  CHECK(run_cli({"clt", "--n", "100", "--window", "0.001", "--out-dir", dir.string()}).code ==
        cli::kUsageError);
  CHECK(run_cli({"clt", "--n", "100", "--window", "-1", "--out-dir", dir.string()}).code ==
        cli::kUsageError);
}
