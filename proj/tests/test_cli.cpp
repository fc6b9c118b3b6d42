// Copyright 2026 The Rainbow Threshold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the rainbow executable end to end through the shell.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rainbow/hypergraph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("rainbow_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `env_prefix rainbow args`, capturing stdout; stderr is discarded.
Run run_cli(const std::string& args, const std::string& env_prefix = "") {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = env_prefix + " \"" RAINBOW_CLI "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string write_file(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string hc(int n) {
  const std::string path = (scratch() / ("hc" + std::to_string(n) + ".json")).string();
  REQUIRE(run_cli("generate hamilton:n=" + std::to_string(n) + " -o " + path).code == 0);
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate writes a readable file with provenance") {
    const std::string path = hc(5);
    const rainbow::Hypergraph h = rainbow::read_hypergraph_file(path);
    CHECK(h.num_edges() == 12);
    CHECK(h.num_vertices() == 10);
    const auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["meta"]["tool"] == "rainbow");
    CHECK(doc["meta"]["seed"] == 1);

    const Run formula = run_cli("generate --formula-only pm:n=12,k=2");
    CHECK(formula.code == 0);
    CHECK(formula.out.find("\"formula\":\"10395\"") != std::string::npos);
  }

  TEST_CASE("machine output starts with a header record") {
    const Run r = run_cli("spread " + hc(4) + " --seed 17");
    REQUIRE(r.code == 0);
    const auto header = nlohmann::json::parse(first_line(r.out));
    CHECK(header["type"] == "header");
    CHECK(header["tool"] == "rainbow");
    CHECK(header["command"] == "spread");
    CHECK(header["seed"] == 17);
    CHECK(header.contains("version"));
    CHECK(header.contains("config"));
    const auto body = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
    CHECK(body["kappa"].get<double>() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(body["witness"] == nlohmann::json::array({0, 5}));
  }

  TEST_CASE("exit codes") {
    const std::string path = hc(4);
    CHECK(run_cli("spread " + path + " --check-kappa 1.2").code == 0);
    CHECK(run_cli("spread " + path + " --check-kappa 1.5").code == 2);
    CHECK(run_cli("spread " + write_file("bad.json", "{\"n\": 3, \"edges\": [[0, 7]]}")).code == 1);
    CHECK(run_cli("spread " + write_file("junk.json", "not json")).code == 1);
    CHECK(run_cli("spread " + (scratch() / "missing.json").string()).code == 1);
    CHECK(run_cli("generate loose:n=7,k=3").code == 1);
    CHECK(run_cli("no-such-command").code == 1);
    CHECK(run_cli("threshold --hypergraph " + path + " --q 3").code == 1);
    CHECK(run_cli("fragment --hypergraph " + path + " --q 4").code == 1);
    CHECK(run_cli("--version").code == 0);
  }

  TEST_CASE("reruns are byte-identical and independent of the thread count") {
    const std::string path = hc(5);
    const std::string frag = "fragment --hypergraph " + path + " --q 5 --seeds 0..4 --allow-infeasible";
    const Run a = run_cli(frag + " --jobs 1");
    const Run b = run_cli(frag + " --jobs 1");
    const Run c = run_cli(frag + " --jobs 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    // The header records the requested job count; everything after it must match.
    CHECK(a.out.substr(a.out.find('\n')) == c.out.substr(c.out.find('\n')));

    const std::string thr = "threshold --hypergraph " + path + " --q 10 --trials 2000";
    const Run t1 = run_cli(thr + " --jobs 1");
    const Run t2 = run_cli(thr + " --jobs 2");
    REQUIRE(t1.code == 0);
    CHECK(t1.out.substr(t1.out.find('\n')) == t2.out.substr(t2.out.find('\n')));
    CHECK(run_cli(thr + " --jobs 1").out == t1.out);
  }

  TEST_CASE("seed flag overrides the environment") {
    const std::string sweep = "threshold --hypergraph " + hc(5) + " --q 10 --trials 500 --sweep 5,7,10";
    const Run env = run_cli(sweep, "RAINBOW_SEED=5");
    const Run flag = run_cli(sweep + " --seed 5");
    const Run both = run_cli(sweep + " --seed 5", "RAINBOW_SEED=9");
    const Run other = run_cli(sweep, "RAINBOW_SEED=9");
    REQUIRE(env.code == 0);
    CHECK(env.out == flag.out);
    CHECK(both.out == flag.out);
    CHECK(other.out != flag.out);
    CHECK(run_cli(sweep, "RAINBOW_SEED=abc").code == 1);
  }

  TEST_CASE("sample and moments") {
    const Run s = run_cli("sample --n 6 --q 3 --m 4 --seed 2");
    REQUIRE(s.code == 0);
    std::istringstream lines(s.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line.rfind("# ", 0) == 0);
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 4);

    const Run m = run_cli("moments --janson " + hc(4) + " --q 4 --p 0.1");
    CHECK(m.code == 0);
    CHECK(m.out.find("delta_exact") != std::string::npos);
    const Run human = run_cli("moments --janson " + hc(4) + " --q 4 --p 0.1 --format human");
    CHECK(human.code == 0);
    CHECK(human.out.find("{\"type\"") == std::string::npos);
  }
}
