/*
 *   Copyright 2026 The operad_lab Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(OPERAD_LAB_CLI) + " " + args + " 2>/dev/null";
  if (args.rfind("env ", 0) == 0) cmd = args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, Compose) {
  auto r = cli("compose --operad assoc --left 4312 --at 1 --right 231");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "564312\n");
  EXPECT_EQ(cli("compose --operad shift --left {1,3,4} --at 2 --right {2,3}").out, "{1,4,5,6}\n");
}

TEST(Cli, CoproductJson) {
  auto r = cli("coproduct --operad assoc --element 3124 --json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 5u);
  EXPECT_EQ(j["terms"][2]["left"], nlohmann::json::parse("[2,1]"));
  EXPECT_EQ(j["terms"][2]["right"], nlohmann::json::parse("[1,2]"));
}

TEST(Cli, SingleShotCommands) {
  EXPECT_EQ(cli("face --operad assoc --element 4312 --at 3").out, "321\n");
  EXPECT_EQ(cli("degen --operad shift --element {1,3} --at 1").out, "{1,2,4}\n");
  EXPECT_EQ(cli("boundary --operad assoc --element 4312").out, "0\n");
  EXPECT_EQ(cli("coboundary --operad assoc --element 1").out, "12\n");
  EXPECT_EQ(cli("odot --operad assoc --left 21 --right 1").out, "213\n");
  EXPECT_EQ(cli("dot --operad assoc --left 1 --right 1").out, "-12\n");
  EXPECT_EQ(cli("brace --operad assoc --element 12").out, "12\n");
  EXPECT_EQ(cli("coboundary --operad endo:dual --element 'E[1>1] + E[2>2]'").out,
            cli("compose --operad endo:dual --left 'E[1,1>1]+E[1,2>2]+E[2,1>2]' --at 1 --right 'E[1>1]+E[2>2]'").out);
}

TEST(Cli, Cohomology) {
  auto r = cli("cohomology --operad endo:dual --field gfp:3 --differential hochschild --lo 0 --hi 3 --json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dims"], nlohmann::json::parse("[2,1,1,1]"));
  EXPECT_EQ(j["field"], "gfp:3");
}

TEST(Cli, VerifyExitCodes) {
  auto ok = cli("verify --suite simplicial --operad shift --trials 500 --seed 42");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("all checks passed"), std::string::npos);
  auto bad = cli("verify --suite chain --operad shift --trials 100 --seed 42 --json");
  EXPECT_EQ(bad.status, 2);
  auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  bool has_seed = false;
  for (const auto& c : j["checks"])
    if (c.contains("counterexample")) has_seed = c["counterexample"]["seed"] == 42;
  EXPECT_TRUE(has_seed);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::string args = "verify --suite coalgebra --operad endo:upper --field gfp:7 --trials 80 --seed 5 --json";
  auto a = cli("env OPERAD_LAB_THREADS=1 " + std::string(OPERAD_LAB_CLI) + " " + args);
  auto b = cli(args);
  auto c = cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  EXPECT_FALSE(b.out.empty());
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(cli("compose --operad assoc --left 4312 --at 9 --right 1").status, 1);
  EXPECT_EQ(cli("compose --operad assoc --left 4412 --at 1 --right 1").status, 64);
  EXPECT_EQ(cli("compose --operad nope --left 1 --at 1 --right 1").status, 64);
  EXPECT_EQ(cli("frobnicate").status, 64);
  EXPECT_EQ(cli("compose --left 1").status, 64);
  EXPECT_EQ(cli("verify --suite nope").status, 64);
  EXPECT_EQ(cli("compose --operad assoc --field gfp:9 --left 1 --at 1 --right 1").status, 64);
  EXPECT_EQ(cli("face --operad endo:dual --element 'E[1,1,1,1,1>1]' --at 1").status, 1);
  EXPECT_EQ(cli("cohomology --operad assoc --differential hochschild").status, 64);
}
