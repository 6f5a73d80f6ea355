#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ars/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(ARSCYCLE_BIN) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "arscycle-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  out << text;
  return path;
}

const char* kDiamond = R"({"vertices": ["a","b","c","d"],
  "edges": [{"id":"ab","src":"a","dst":"b"},{"id":"ac","src":"a","dst":"c"},
            {"id":"bd","src":"b","dst":"d"},{"id":"cd","src":"c","dst":"d"}]})";

const char* kFork = R"({"vertices": ["a","b","c"],
  "edges": [{"id":"ab","src":"a","dst":"b"},{"id":"ac","src":"a","dst":"c"}]})";

const char* kTwoCycle = R"({"vertices": ["a","b"],
  "edges": [{"id":"ab","src":"a","dst":"b"},{"id":"ba","src":"b","dst":"a"}]})";

}  // namespace

TEST_CASE("check: confluent, non-confluent, malformed") {
  const auto diamond = write_temp("diamond.json", kDiamond);
  CHECK(run_cli("check --system " + diamond.string()).exit_code == 0);

  const auto fork = write_temp("fork.json", kFork);
  const auto failed = run_cli("check --system " + fork.string());
  CHECK(failed.exit_code == 1);
  CHECK(failed.output.find("ab") != std::string::npos);

  const auto bad = write_temp("bad.json", "šš not json");
  CHECK(run_cli("check --system " + bad.string()).exit_code == 2);
  CHECK(run_cli("check --system /does/not/exist.json").exit_code == 2);
  CHECK(run_cli("check").exit_code == 2);           // no input selected
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
}

TEST_CASE("check reads the system from stdin") {
  const auto diamond = write_temp("diamond.json", kDiamond);
  const std::string cmd = std::string("cat ") + diamond.string() + " | " +
                          ARSCYCLE_BIN + " check --system - > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}

TEST_CASE("decompose: empty cycle, fg cycle, monotone evidence") {
  const auto empty_cycle = write_temp("empty_cycle.json", R"({"start": "aA", "steps": []})");
  const auto r0 = run_cli("decompose --freegroup 1 --cycle " + empty_cycle.string());
  CHECK(r0.exit_code == 0);

  const auto fg_cycle = write_temp("fg_cycle.json",
                                   R"({"start": "aAa", "steps": [
                                        {"edge": "aAa:0", "dir": "fwd"},
                                        {"edge": "aAa:1", "dir": "bwd"}]})");
  const auto r1 =
      run_cli("decompose --freegroup 1 --joiner fg --cycle " + fg_cycle.string() + " --format json");
  CHECK(r1.exit_code == 0);
  const ars::Json trace = ars::parse_json_text(r1.output);
  CHECK(trace.at("steps").size() == 1);
  CHECK(trace.at("terminal") == "a");

  const auto loop_sys = write_temp("two_cycle.json", kTwoCycle);
  const auto loop = write_temp("loop.json",
                               R"({"start": "a", "steps": [
                                    {"edge": "ab", "dir": "fwd"},
                                    {"edge": "ba", "dir": "fwd"}]})");
  const auto r3 = run_cli("decompose --system " + loop_sys.string() + " --cycle " + loop.string());
  CHECK(r3.exit_code == 3);
  CHECK(r3.output.find("Noetherian") != std::string::npos);
}

TEST_CASE("coherence: certified, counterexample, oracle agreement") {
  const auto certified =
      run_cli("coherence --freegroup 1 --max-len 4 --labelling @fg-letters --joiner fg "
              "--oracle-bound 4 --json");
  CHECK(certified.exit_code == 0);
  const ars::Json cj = ars::parse_json_text(certified.output);
  CHECK(cj.at("status") == "certified");
  CHECK(cj.at("oracle").at("agrees") == true);

  const auto parallel = write_temp("parallel.json",
                                   R"({"vertices": ["a","b"],
      "edges": [{"id":"e1","src":"a","dst":"b"},{"id":"e2","src":"a","dst":"b"}]})");
  const auto labelling = write_temp("parallel_labels.json",
                                    R"({"target": {"kind": "permutation", "degree": 3},
      "morphisms": {"e1": "2 1 3", "e2": "3 2 1"}})");
  const auto counter = run_cli("coherence --system " + parallel.string() + " --labelling " +
                               labelling.string() + " --oracle-bound 2 --json");
  CHECK(counter.exit_code == 1);
  const ars::Json kj = ars::parse_json_text(counter.output);
  CHECK(kj.at("status") == "counterexample");
  CHECK(kj.at("oracle").at("agrees") == true);

  const auto no_labels = write_temp("missing_labels.json",
                                    R"({"target": {"kind": "permutation", "degree": 3},
      "morphisms": {}})");
  CHECK(run_cli("coherence --system " + parallel.string() + " --labelling " +
                no_labels.string())
            .exit_code == 2);
}

TEST_CASE("enumerate and freegroup generation") {
  const auto single = write_temp("single_edge.json",
                                 R"({"vertices": ["a","b"],
      "edges": [{"id":"e","src":"a","dst":"b"}]})");
  const auto r = run_cli("enumerate --system " + single.string() + " --bound 2 --json");
  CHECK(r.exit_code == 0);
  CHECK(ars::parse_json_text(r.output).size() == 4);

  const auto empty = write_temp("edgeless.json", R"({"vertices": ["a","b"], "edges": []})");
  const auto r2 = run_cli("enumerate --system " + empty.string() + " --bound 3 --json");
  CHECK(ars::parse_json_text(r2.output).size() == 2);  // one trivial cycle per vertex

  const auto fg = run_cli("freegroup --generators 1 --max-len 4");
  CHECK(fg.exit_code == 0);
  const ars::Json sys = ars::parse_json_text(fg.output);
  CHECK(sys.at("vertices").size() == 31);
}

TEST_CASE("verdicts are deterministic across runs") {
  const auto fork = write_temp("fork2.json", kFork);
  const auto a = run_cli("check --system " + fork.string() + " --json");
  const auto b = run_cli("check --system " + fork.string() + " --json");
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);
}
