// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Output {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded.
Output Cli(const std::string& args) {
  const std::string cmd =
      std::string("'") + SUBMOD_CLI_PATH + "' " + args + " 2>/dev/null";
  Output r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.out.append(buf, got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("submod_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenGraphIsDeterministic) {
  const Output a = Cli("gen-graph er --n 30 --p 0.2 --seed 5");
  const Output b = Cli("gen-graph er --n 30 --p 0.2 --seed 5");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("30 ", 0), 0u);
  EXPECT_NE(a.out, Cli("gen-graph er --n 30 --p 0.2 --seed 6").out);
}

TEST_F(CliTest, OptOnTriangle) {
  const std::string path = Write("tri.txt", "3 3\n0 1 1\n1 2 1\n0 2 1\n");
  const Output r = Cli("opt --graph '" + path + "' --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST_F(CliTest, OptModular) {
  const Output r = Cli("opt --modular 5,4,3 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "9\n");
}

TEST_F(CliTest, OptLimitIsResourceError) {
  EXPECT_EQ(Cli("opt --modular 1,1,1,1,1,1,1,1 --k 4 --limit 10").code, 3);
}

TEST_F(CliTest, RunWritesOutputs) {
  const std::string config = Write(
      "grid.cfg",
      "instance = er\nn = 20\np = 0.2\nk = 3\n"
      "algorithms = standard_greedy,random_greedy\ntrials = 2\n");
  const std::string prefix = (dir_ / "out").string();
  EXPECT_EQ(Cli("run --config '" + config + "' -o '" + prefix + "'").code, 0);
  EXPECT_TRUE(fs::exists(prefix + ".csv"));
  EXPECT_TRUE(fs::exists(prefix + "_summary.csv"));
  EXPECT_TRUE(fs::exists(prefix + ".config"));
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("opt --modular 1,2").code, 2);
  EXPECT_EQ(Cli("run --config '" + (dir_ / "missing.cfg").string() + "'").code,
            2);
  const std::string bad = Write("bad.cfg", "k = 3\nalgorithms = nope\n");
  EXPECT_EQ(Cli("run --config '" + bad + "'").code, 2);
  const std::string failing = Write(
      "fail.cfg", "instance = modular\nweights = 1,2\nk = 5\n"
                  "algorithms = standard_greedy\n");
  EXPECT_EQ(Cli("run --config '" + failing + "'").code, 2);
}

TEST_F(CliTest, CertifySingleCriterion) {
  const Output r = Cli("certify --only 9 --quick");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("[PASS]", 0), 0u);
}

}  // namespace
