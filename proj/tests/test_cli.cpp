// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult
{
  int         code = -1;
  std::string out;
};

CliResult run(std::string const &args)
{
  std::string const command = std::string(NETSHARE_CLI) + " " + args + " 2>/dev/null";
  CliResult               result;
  FILE             *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr)
  {
    return result;
  }
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr)
  {
    result.out += buffer.data();
  }
  int const status = pclose(pipe);
  result.code      = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path scratch(std::string const &name)
{
  return std::filesystem::temp_directory_path() / ("netshare_cli_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, SolveCvmZeroCharge)
{
  CliResult const r = run("solve --mechanism cvm --fixture zero-charge");
  ASSERT_EQ(r.code, 0);
  auto const doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["shares"]["a"], 0);
  EXPECT_EQ(doc["shares"]["b"], 0);
  EXPECT_EQ(doc["total_cost"], 5);
}

TEST(Cli, SolveRsmWithTrace)
{
  CliResult const r = run("solve -m rsm --fixture line-deficit --trace");
  ASSERT_EQ(r.code, 0);
  auto const doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["shares"]["a"], 2);
  EXPECT_EQ(doc["shares"]["b"], 3);
  EXPECT_EQ(doc["stage_count"], 2);
  EXPECT_EQ(doc["stages"].size(), 2u);
  EXPECT_FALSE(nlohmann::json::parse(run("solve -m rsm --fixture line-deficit").out).contains("stages"));
}

TEST(Cli, SolveBird)
{
  auto const doc = nlohmann::json::parse(run("solve -m bird --fixture bird-manipulation").out);
  EXPECT_EQ(doc["shares"]["a"], 1);
  EXPECT_EQ(doc["shares"]["b"], 3);
  EXPECT_EQ(doc["shares"]["c"], 2);
}

TEST(Cli, SolveFromFileHonoursReports)
{
  auto const path = scratch("deviated.json");
  std::ofstream(path) << R"({"source": "s", "agents": ["a", "b", "c"],
    "edges": [{"u": "s", "v": "a", "cost": 1}, {"u": "a", "v": "b", "cost": 3},
              {"u": "a", "v": "c", "cost": 4}, {"u": "b", "v": "c", "cost": 2}],
    "valuations": {"a": 10, "b": 10, "c": 10},
    "reports": {"b": {"edges": [["b", "c"]], "valuation": 10}}})";
  CliResult const r = run("solve -m bird --input " + path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["shares"]["b"], 2);
}

TEST(Cli, CheckReportsViolationsThroughExitCode)
{
  CliResult const bird = run("check --property truthfulness --mechanism bird --fixture bird-manipulation");
  EXPECT_EQ(bird.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bird.out)["verdict"], "violated");
  CliResult const cvm = run("check -p truthfulness -m cvm --fixture bird-manipulation");
  EXPECT_EQ(cvm.code, 0);
}

TEST(Cli, CriticalValueGroundFlag)
{
  EXPECT_EQ(run("check -p truthfulness --fixture critical-value-gap").code, 1);
  EXPECT_EQ(run("check -p truthfulness --fixture critical-value-gap --cv-all-others").code, 0);
}

TEST(Cli, CheckCorpus)
{
  CliResult const r = run("check -p budget-balance -m rsm --instances 4 --agents 3 --seed 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["instances_checked"], 4);
}

TEST(Cli, CheckAllListsEveryProperty)
{
  CliResult const r = run("check -p all -m cvm --fixture triangle --samples 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 11u);
}

TEST(Cli, UsageAndInputErrors)
{
  EXPECT_EQ(run("check -p fairness --fixture triangle").code, 2);
  EXPECT_EQ(run("gen --edge-probability 1.5").code, 2);
  EXPECT_EQ(run("solve -m vcg --fixture triangle").code, 2);
  EXPECT_EQ(run("solve -m cvm --input /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("solve -m cvm").code, 2);
  EXPECT_EQ(run("demo nonsense").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, SizeCap)
{
  auto const path = scratch("big.json");
  ASSERT_EQ(run("gen --agents 12 --edge-probability 0.4 --seed 3 --out " + path.string()).code, 0);
  EXPECT_EQ(run("check -p efficiency -m cvm --input " + path.string()).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, GenIsDeterministic)
{
  CliResult const a = run("gen --agents 5 --seed 42");
  CliResult const b = run("gen --agents 5 --seed 42");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto const doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["agents"].size(), 5u);
  EXPECT_NE(a.out, run("gen --agents 5 --seed 43").out);
}

TEST(Cli, Demos)
{
  CliResult const bird = run("demo bird-manipulation");
  EXPECT_EQ(bird.code, 0);
  EXPECT_NE(bird.out.find("b withholds (a,b) shares: a=1 b=2 c=4"), std::string::npos);
  EXPECT_NE(bird.out.find("bird truthfulness: violated"), std::string::npos);

  CliResult const bbr = run("demo impossibility-bbr");
  EXPECT_NE(bbr.out.find("cvm budget balance ratio: 0"), std::string::npos);

  CliResult const bb = run("demo impossibility-bb");
  EXPECT_NE(bb.out.find("cvm budget-balance: violated"), std::string::npos);
  EXPECT_NE(bb.out.find("rsm efficiency: violated"), std::string::npos);

  CliResult const ratio = run("demo welfare-ratio-collapse");
  EXPECT_NE(ratio.out.find("100\t1/51\t1/51"), std::string::npos);
}

TEST(Cli, ListsFixtures)
{
  CliResult const r = run("fixtures");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("staged-purchase"), std::string::npos);
}

}  // namespace
