#include <dhenum/core_model.hpp>
#include <dhenum/json_io.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// End-to-end checks against the installed command surface: exit codes,
// stream separation, determinism and the documented JSON/CSV schemas.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string fresh_temp_path(const std::string& suffix) {
  static int counter = 0;
  return "/tmp/dhenum_cli_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) +
         suffix;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = fresh_temp_path(".out");
  const std::string err_path = out_path + ".err";
  const std::string cmd =
      std::string(DHENUM_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string temp_json(const std::string& text) {
  const std::string path = fresh_temp_path(".json");
  write_file(path, text);
  return path;
}

const char* kTrivialInstance =
    R"({"n": 3, "d_plus": [1,0,0], "d_minus": [0,1,1], "mu": [{"tail":1,"head":2,"count":1}]})";

}  // namespace

TEST_CASE("count reports exact and asymptotic values for the unique instance") {
  const std::string path = temp_json(kTrivialInstance);
  const RunResult r = run_cli("count " + path + " --mode both");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"H\": \"1\"") != std::string::npos);
  CHECK(r.out.find("\"P\": \"1/1\"") != std::string::npos);
  CHECK(r.out.find("\"relative_error_log\": 0.0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("count echoes an instance that reparses identically") {
  const std::string path = temp_json(kTrivialInstance);
  const RunResult r = run_cli("count " + path + " --mode asymptotic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"exact\"") == std::string::npos);
  CHECK(r.out.find("\"log_f\"") != std::string::npos);

  const auto report = nlohmann::json::parse(r.out);
  const dhenum::Instance echoed = dhenum::parse_instance(report.at("instance").dump());
  const dhenum::Instance original = dhenum::parse_instance(kTrivialInstance);
  CHECK(echoed.n == original.n);
  CHECK(echoed.d_plus == original.d_plus);
  CHECK(echoed.d_minus == original.d_minus);
  CHECK(echoed.mu == original.mu);
  std::remove(path.c_str());
}

TEST_CASE("validation failures exit 2 and name the invariant") {
  const std::string path = temp_json(
      R"({"n": 3, "d_plus": [1,0,0], "d_minus": [0,0,0], "mu": [{"tail":1,"head":0,"count":1}]})");
  const RunResult r = run_cli("count " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("nonempty") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("infeasible instances count as zero rather than failing") {
  const std::string path = temp_json(
      R"({"n": 3, "d_plus": [3,0,0], "d_minus": [0,2,1], "mu": [{"tail":3,"head":3,"count":1}]})");
  const RunResult r = run_cli("count " + path + " --mode both");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"H\": \"0\"") != std::string::npos);
  CHECK(r.out.find("\"P\"") == std::string::npos);  // no pairs, no probability
  CHECK(r.out.find("relative_error_log") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exhausted work budgets exit 3") {
  const std::string path = temp_json(kTrivialInstance);
  const RunResult r = run_cli("count " + path + " --mode exact --budget 2");
  CHECK(r.exit_code == 3);
  std::remove(path.c_str());
}

TEST_CASE("empty ensembles exit 4") {
  // Tail of size 3 with a disjoint head cannot fit in 3 vertices.
  const std::string path = temp_json(
      R"({"n": 3, "d_plus": [3,0,0], "d_minus": [0,2,1], "mu": [{"tail":3,"head":3,"count":1}]})");
  const RunResult r = run_cli("sample " + path + " --count 1 --seed 1");
  CHECK(r.exit_code == 4);
  std::remove(path.c_str());
}

TEST_CASE("sampling is byte-identical per seed and line-per-sample") {
  const std::string path = temp_json(
      R"({"n": 6, "d_plus": [1,1,0,0,0,0], "d_minus": [0,0,1,1,1,1],
          "mu": [{"tail":1,"head":2,"count":2}]})");
  const RunResult a = run_cli("sample " + path + " --count 3 --seed 7");
  const RunResult b = run_cli("sample " + path + " --count 3 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // Every emitted line must revalidate against the instance.
  const dhenum::Instance inst = dhenum::parse_instance(slurp(path));
  int lines = 0;
  std::istringstream in(a.out);
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
    const dhenum::Dihypergraph h = dhenum::parse_dihypergraph(line);
    const dhenum::Instance derived = dhenum::instance_of(h);
    CHECK(derived.d_plus == inst.d_plus);
    CHECK(derived.d_minus == inst.d_minus);
    CHECK(derived.mu == inst.mu);
  }
  CHECK(lines == 3);
  const RunResult c = run_cli("sample " + path + " --count 3 --seed 8");
  CHECK(c.out != a.out);
  std::remove(path.c_str());
}

TEST_CASE("sweep emits the fixed csv header and zero log-ratios on the exact family") {
  const std::string path =
      temp_json(R"({"generator": "disjoint_support", "params": [1, 2, 3]})");
  const RunResult r = run_cli("sweep " + path);
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "param,m_plus,m_minus,log_h_exact,log_f,abs_log_ratio,eta,eta_min,eta_star_minus,"
        "eta_star_plus,ratio_to_bound");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    // abs_log_ratio is the sixth column; on this family it is numerically 0.
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 6; ++i) std::getline(cells, cell, ',');
    CHECK(std::fabs(std::stod(cell)) < 1e-9);
  }
  CHECK(rows == 3);
  std::remove(path.c_str());
}

TEST_CASE("count --mode exact omits the asymptotic block") {
  const std::string path = temp_json(kTrivialInstance);
  const RunResult r = run_cli("count " + path + " --mode exact");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"exact\"") != std::string::npos);
  CHECK(r.out.find("\"asymptotic\"") == std::string::npos);
  CHECK(r.out.find("relative_error_log") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("sweep keeps the gap-to-bound ratio bounded on the irregular family") {
  const std::string path = temp_json(R"({"generator": "irregular_tail", "params": [2, 3, 4]})");
  const RunResult r = run_cli("sweep " + path);
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);  // header
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 11; ++i) std::getline(cells, cell, ',');
    const double ratio = std::stod(cell);  // ratio_to_bound, last column
    CHECK(ratio > 0.0);
    CHECK(ratio < 1.0);
  }
  CHECK(rows == 3);
  std::remove(path.c_str());
}

TEST_CASE("sweep accepts explicit instance rows and keeps going past bad rows") {
  const std::string path = temp_json(std::string(R"({"rows": [
    {"param": "good", "instance": )") + kTrivialInstance + R"(},
    {"param": "bad", "instance": {"n": 1, "d_plus": [1], "d_minus": [0], "mu": []}}
  ]})");
  const RunResult r = run_cli("sweep " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("good,") != std::string::npos);
  CHECK(r.out.find("bad,NA") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify prints one status line per identity") {
  const RunResult r = run_cli("verify --max-n 3 --max-mass 6");
  CHECK(r.exit_code == 0);
  int pass_lines = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("PASS", 0) == 0) ++pass_lines;
  CHECK(pass_lines == 6);
}
