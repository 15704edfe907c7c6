// Copyright 2026 The Gasket Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GASKET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, Normalize) {
  const auto r = run("normalize bbb.L");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ".L\n");
  EXPECT_EQ(run("normalize ac.T").out, "aa.R\n");
}

TEST(Cli, Distances) {
  EXPECT_EQ(run("gdist .T a.L").out, "1/2 (0.500000000000)\n");
  EXPECT_EQ(run("dist --level 2 aa.T ab.L").out, "1/2 (0.500000000000)\n");
  EXPECT_EQ(run("dist --level 3 aaa.T aaa.L").out, "1/8 (0.125000000000)\n");
  EXPECT_EQ(run("gdist ab.R bc.T").out, "1/2 (0.500000000000)\n");
}

TEST(Cli, Coordinates) {
  EXPECT_EQ(run("coords ba.R").out, "(3/8, 1/8√3) (0.375000000000, 0.216506350946)\n");
  EXPECT_EQ(run("address --x 3/8 --y-coeff 1/8 --depth 2").out, "ba.R\n");
  EXPECT_EQ(run("address --x 1/2 --y-coeff 0 --depth 1").out, "b.R\n");
}

TEST(Cli, Mediate) {
  const auto r = run("mediate --coalgebra delta --point 5/16 --depth 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "address: .L\n"
            "coords: (0, 0) (0.000000000000, 0.000000000000)\n"
            "error_bound: 1/1048576 (0.000000953674)\n");
  EXPECT_EQ(run("mediate --coalgebra gasket-sigma --point ba.R --depth 4").out.substr(0, 15), "address: ba.R\nc");
}

TEST(Cli, ValidationFailuresExitOne) {
  EXPECT_EQ(run("normalize abd.T").code, 1);
  EXPECT_EQ(run("dist --level 2 a.T ab.L").code, 1);
  EXPECT_EQ(run("address --x 2 --y-coeff 0 --depth 3").code, 1);
  EXPECT_EQ(run("mediate --coalgebra delta --point 3/2 --depth 3").code, 1);
  EXPECT_EQ(run("mediate --coalgebra delta --point 1/2 --depth 0").code, 1);
  EXPECT_EQ(run("render --depth 13 --out /dev/null").code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("normalize").code, 2);
  EXPECT_EQ(run("dist .T .L").code, 2);
  EXPECT_EQ(run("gdist .T .L --bogus").code, 2);
  EXPECT_EQ(run("mediate --coalgebra nope --point 1 --depth 2").code, 2);
  EXPECT_EQ(run("verify --suite everything").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Render) {
  const auto dir = std::filesystem::temp_directory_path() / "gasket_cli_test";
  std::filesystem::create_directories(dir);
  const auto svg = (dir / "g.svg").string();
  const auto r = run("render --depth 2 --out " + svg);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "wrote 15 points to " + svg + "\n");
  EXPECT_TRUE(std::filesystem::exists(svg));
  const auto txt = (dir / "g.txt").string();
  EXPECT_EQ(run("render --depth 1 --format points --out " + txt).code, 0);
  std::ifstream in(txt);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "1/2 0 0 1/2");
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifySuite) {
  const auto r = run("verify --suite counterexamples");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS  criterion 5"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  criterion 6"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  criterion 7"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run("verify --suite metric").out, run("verify --suite metric").out);
  EXPECT_EQ(run("coords abcabc.L").out, run("coords abcabc.L").out);
}

}  // namespace
