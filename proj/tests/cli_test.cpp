/*
 * Copyright 2026 The armplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(ARMPLAN_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("armplan_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::create_directories(dir_);
    std::ofstream(dir_ / "scenario.json") << R"({
      "arm": {"link_lengths": [1, 1, 1]},
      "start_deg": [0, 30, 60],
      "goal": [0.8, 0.9, 1.5],
      "obstacles": [{"shape": "cube", "center": [1, 1, 3], "edge": 0.2,
                     "velocity": [0, 0, -0.05]}],
      "de": {"population_size": 40, "max_iterations": 30, "seed": 5}
    })";
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, PlanWritesReproducibleFiles) {
  const std::string scenario = (dir_ / "scenario.json").string();
  const CliRun a = run_cli("plan --scenario " + scenario + " --out-dir " + (dir_ / "a").string());
  ASSERT_EQ(a.status, 0) << a.output;
  EXPECT_NE(a.output.find("outcome: SUCCESS"), std::string::npos) << a.output;
  const CliRun b = run_cli("plan --scenario " + scenario + " --out-dir " + (dir_ / "b").string());
  ASSERT_EQ(b.status, 0) << b.output;
  EXPECT_EQ(slurp(dir_ / "a" / "trajectory.csv"), slurp(dir_ / "b" / "trajectory.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "trace.csv"), slurp(dir_ / "b" / "trace.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "trajectory.csv").rfind("step,t1_deg,", 0), 0u);

  const CliRun c = run_cli("plan --scenario " + scenario + " --seed 6 --out-dir " +
                        (dir_ / "c").string());
  ASSERT_EQ(c.status, 0) << c.output;
  EXPECT_NE(slurp(dir_ / "a" / "trace.csv"), slurp(dir_ / "c" / "trace.csv"));
}

TEST_F(CliTest, FailedPlanStillExitsZero) {
  std::ofstream(dir_ / "short.json") << R"({
    "arm": {"link_lengths": [1, 1, 1]}, "start_deg": [0, 30, 60],
    "goal": [-1, -1, 0.5], "horizon": 1,
    "de": {"population_size": 20, "max_iterations": 5}})";
  const CliRun r = run_cli("plan --scenario " + (dir_ / "short.json").string() +
                        " --out-dir " + dir_.string());
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("outcome: FAILURE"), std::string::npos);
}

TEST_F(CliTest, InvalidScenarioExitsNonZero) {
  std::ofstream(dir_ / "bad.json") << R"({"arm": {"link_lengths": [1, 0, 1]},
    "start_deg": [0, 0, 0], "goal": [1, 1, 1]})";
  const CliRun r = run_cli("plan --scenario " + (dir_ / "bad.json").string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.output.find("arm.link_lengths[1]"), std::string::npos) << r.output;
}

TEST_F(CliTest, DeBench) {
  const CliRun r = run_cli("de-bench --function sphere --dim 6 --np 150 --iters 100 --seed 2");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("best_cost:"), std::string::npos);
  EXPECT_NE(r.output.find("\n100,"), std::string::npos);

  const CliRun bad = run_cli("de-bench --function ackley");
  EXPECT_NE(bad.status, 0);
  EXPECT_NE(bad.output.find("unknown test function"), std::string::npos);
}

TEST_F(CliTest, MonteCarloIsReproducible) {
  const std::string tmpl = (dir_ / "scenario.json").string();
  const CliRun a = run_cli("montecarlo --trials 3 --seed 4 --template " + tmpl);
  const CliRun b = run_cli("montecarlo --trials 3 --seed 4 --template " + tmpl);
  ASSERT_EQ(a.status, 0) << a.output;
  auto strip_runtime = [](const std::string& s) { return s.substr(0, s.find("runtime_s")); };
  EXPECT_EQ(strip_runtime(a.output), strip_runtime(b.output));
  EXPECT_NE(a.output.find("success_rate:"), std::string::npos);
}

}  // namespace
