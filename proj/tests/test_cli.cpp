// End-to-end checks of the command-line tool: worked values, CSV trends,
// byte-stable reruns, and the exit-code contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(QRDP_CLI_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  const int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), output};
}

std::string sample(const std::string& name) {
  return std::string(QRDP_SAMPLES_DIR) + "/" + name;
}

std::filesystem::path scratch_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qrdp_cli_test_" + name);
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("budget prints the closed-form value") {
  const CliResult r = run_cli("budget --mech dep --p 0.5 --D 2 --d 0.1 --alpha 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "eps_hat=0.032790"));
}

TEST_CASE("budget at the pure-DP endpoint") {
  const CliResult r = run_cli("budget --mech dep --p 0.5 --D 2 --d 0.1 --alpha inf");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "eps_hat=0.182322"));
}

TEST_CASE("budget with full damping is zero") {
  const CliResult r = run_cli("budget --mech gad --gamma 1 --d 0.1 --alpha 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "eps_hat=0.000000"));
}

TEST_CASE("budget exit codes: usage 2, math domain 3") {
  CHECK(run_cli("budget --no-such-flag").exit_code == 2);
  CHECK(run_cli("bogus-command").exit_code == 2);
  CHECK(run_cli("budget --mech gad --gamma 1.5 --d 0.1 --alpha 2").exit_code == 3);
  CHECK(run_cli("budget --mech dep --p 0.5 --D 2 --d 0.1 --alpha 0.5").exit_code == 3);
}

TEST_CASE("sweep emits a deterministic CSV with the expected trends") {
  const CliResult first = run_cli("sweep --spec " + sample("sweep_dep_p.json"));
  CHECK(first.exit_code == 0);
  const CliResult second = run_cli("sweep --spec " + sample("sweep_dep_p.json"));
  CHECK(first.output == second.output);  // byte-identical

  const auto rows = parse_csv(first.output);
  REQUIRE(rows.size() == 1 + 27);  // header + 9 params x 3 alphas
  CHECK(rows[0] == std::vector<std::string>{"param", "alpha", "eps_hat"});

  // strictly decreasing down each alpha column
  for (std::size_t a = 0; a < 3; ++a) {
    double prev = 1e300;
    for (std::size_t i = 0; i < 9; ++i) {
      const double eps = std::stod(rows[1 + i * 3 + a][2]);
      CHECK(eps < prev);
      prev = eps;
    }
  }
}

TEST_CASE("pad lambda sweep decreases as well") {
  const CliResult r = run_cli("sweep --spec " + sample("sweep_pad_lambda.json"));
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1 + 27);
  double prev = 1e300;
  for (std::size_t i = 0; i < 9; ++i) {
    const double eps = std::stod(rows[1 + i * 3][2]);  // alpha = 2 column
    CHECK(eps < prev);
    prev = eps;
  }
}

TEST_CASE("degenerate single-step sweep yields one row per alpha") {
  const auto spec = scratch_file("single_step.json", R"({
    "mechanism": {"kind": "dep", "p": 0.5, "D": 2},
    "param": "p", "lo": 0.4, "hi": 0.6, "steps": 1,
    "alphas": [2, "inf"], "d": 0.1
  })");
  const CliResult r = run_cli("sweep --spec " + spec.string());
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1 + 2);
  CHECK(std::stod(rows[1][0]) == doctest::Approx(0.4));
}

TEST_CASE("sweep rejects a malformed spec document") {
  const auto bad = scratch_file("bad_sweep.json", R"({"mechanism": {"kind": "dep"}})");
  CHECK(run_cli("sweep --spec " + bad.string()).exit_code == 4);
  CHECK(run_cli("sweep --spec /nonexistent/sweep.json").exit_code == 4);
}

TEST_CASE("exact reproduces the worked instance in both directions") {
  const CliResult r = run_cli("exact --rho " + sample("state_a.json") + " --sigma " +
                              sample("state_b.json") + " --povm " + sample("basis_povm.json") +
                              " --mech dep --p 0.5 --D 2 --alpha 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "forward=0.010050"));
  CHECK(contains(r.output, "reverse="));
  CHECK(contains(r.output, "max="));
  CHECK(contains(r.output, "trace_distance=0.141421"));
}

TEST_CASE("exact on identical states is zero both ways") {
  const CliResult r = run_cli("exact --rho " + sample("state_a.json") + " --sigma " +
                              sample("state_a.json") + " --povm " + sample("basis_povm.json") +
                              " --mech dep --p 0.5 --D 2 --alpha 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "forward=0.000000"));
  CHECK(contains(r.output, "reverse=0.000000"));
}

TEST_CASE("exact rejects invalid documents with exit 4") {
  const auto bad_povm = scratch_file(
      "bad_povm.json", R"({"dim": 2, "elements": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]})");
  CHECK(run_cli("exact --rho " + sample("state_a.json") + " --sigma " + sample("state_b.json") +
                " --povm " + bad_povm.string() + " --mech dep --alpha 2")
            .exit_code == 4);

  const auto bad_state = scratch_file(
      "bad_state.json", R"({"dim": 2, "entries": [[[0.5,0],[0,0]],[[0,0],[0.6,0]]]})");
  CHECK(run_cli("exact --rho " + bad_state.string() + " --sigma " + sample("state_b.json") +
                " --povm " + sample("basis_povm.json") + " --mech dep --alpha 2")
            .exit_code == 4);
}

TEST_CASE("exact randomized search is seed-stable") {
  const std::string base = "exact --rho " + sample("state_a.json") + " --sigma " +
                           sample("state_b.json") + " --povm " + sample("basis_povm.json") +
                           " --mech gad --gamma 0.3 --alpha 2 --search 64 --seed 11";
  const CliResult a = run_cli(base);
  const CliResult b = run_cli(base);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(contains(a.output, "searched_max="));
}

TEST_CASE("utility default sweep hits the worked fidelity at p = 0.5") {
  const CliResult first = run_cli("utility");
  CHECK(first.exit_code == 0);
  CHECK(first.output == run_cli("utility").output);  // byte-identical rerun

  const auto rows = parse_csv(first.output);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>{"param", "alpha", "eps_hat", "fidelity"});
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::stod(rows[i][0]) == doctest::Approx(0.5).epsilon(1e-12)) {
      CHECK(std::stod(rows[i][3]) ==
            doctest::Approx(0.5 * (1.0 + 0.16 + std::sqrt(0.68 * 0.92))).epsilon(1e-9));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("utility gad sweep starting at zero damping reports unit fidelity and inf budget") {
  const auto spec = scratch_file("gad_zero.json", R"({
    "mechanism": {"kind": "gad", "p": 0.5, "gamma": 0.3},
    "param": "gamma", "lo": 0.0, "hi": 0.8, "steps": 5,
    "alphas": [2], "d": 0.1
  })");
  const CliResult r = run_cli("utility --spec " + spec.string());
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1 + 5);
  CHECK(rows[1][2] == "inf");
  CHECK(std::stod(rows[1][3]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("simulate: single-task workload cumulative equals the task budget") {
  const auto workload = scratch_file("single_task.json", R"({
    "k_qpus": 1,
    "rounds": [[{"task_id": "only", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1}]]
  })");
  const CliResult r = run_cli("simulate --workload " + workload.string() +
                              " --delta 0.01 --alpha 2 --alpha inf");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1 + 2);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(std::log(31.0 / 30.0)).epsilon(1e-12));
  CHECK(rows[1][2] == rows[1][3]);  // round == cumulative for a single round
}

TEST_CASE("simulate: identical tasks across rounds accumulate linearly") {
  const auto workload = scratch_file("six_tasks.json", R"({
    "k_qpus": 2,
    "rounds": [
      [{"task_id": "a", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1},
       {"task_id": "b", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 2}],
      [{"task_id": "c", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1},
       {"task_id": "d", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 2}],
      [{"task_id": "e", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1},
       {"task_id": "f", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 2}]
    ]
  })");
  const CliResult r = run_cli("simulate --workload " + workload.string() +
                              " --delta 0.01 --alpha 2");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1 + 3);
  const double per_task = std::log(31.0 / 30.0);
  CHECK(std::stod(rows[3][3]) == doctest::Approx(6.0 * per_task).epsilon(1e-12));
}

TEST_CASE("simulate: schedule conflicts exit 5") {
  const auto workload = scratch_file("conflict.json", R"({
    "k_qpus": 2,
    "rounds": [[{"task_id": "a", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1},
                {"task_id": "b", "noise": {"kind": "dep", "p": 0.5, "D": 2}, "d": 0.1, "qpu": 1}]]
  })");
  CHECK(run_cli("simulate --workload " + workload.string()).exit_code == 5);
}

TEST_CASE("simulate writes a JSON summary when asked") {
  const auto out_json = std::filesystem::temp_directory_path() / "qrdp_cli_test_summary.json";
  std::filesystem::remove(out_json);
  const CliResult r = run_cli("simulate --workload " + sample("workload.json") +
                              " --delta 0.01 --json " + out_json.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out_json);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "\"best_dp\""));
  CHECK(contains(buf.str(), "\"cumulative_eps\""));
}

TEST_CASE("check-channel passes the stock mechanisms and fails a broken set") {
  const CliResult gad = run_cli("check-channel --channel " + sample("channel_gad.json"));
  CHECK(gad.exit_code == 0);
  CHECK(contains(gad.output, "pass"));

  const CliResult dep = run_cli("check-channel --channel " + sample("channel_dep.json"));
  CHECK(dep.exit_code == 0);
  CHECK(contains(dep.output, "pass"));

  const auto broken = scratch_file("broken_kraus.json",
                                   R"({"kind": "kraus", "ops": [[[[1,0],[0,0]],[[0,0],[0.8,0]]]]})");
  const CliResult bad = run_cli("check-channel --channel " + broken.string());
  CHECK(bad.exit_code == 4);
  CHECK(contains(bad.output, "fail"));
}

TEST_CASE("check-channel accepts a complete custom Kraus set") {
  // dephasing written out by hand: diag(1, sqrt(0.5)) and diag(0, sqrt(0.5))
  const auto ok = scratch_file(
      "ok_kraus.json",
      R"({"kind": "kraus", "ops": [[[[1,0],[0,0]],[[0,0],[0.7071067811865476,0]]],
                                   [[[0,0],[0,0]],[[0,0],[0.7071067811865476,0]]]]})");
  const CliResult r = run_cli("check-channel --channel " + ok.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass"));
}
