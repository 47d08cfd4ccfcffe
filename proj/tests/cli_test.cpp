// Copyright 2026 The wernerlab Authors
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

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "wernerlab/io.hpp"

namespace wernerlab {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

TEST(Io, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-1.0), "-1");
  EXPECT_EQ(format_double(1.0 / 0.0), "inf");
  EXPECT_EQ(parse_double("inf"), 1.0 / 0.0);
  EXPECT_EQ(parse_double(format_double(0.9659258262890683)), 0.9659258262890683);
  EXPECT_THROW(parse_double("0.1x"), Error);
}

TEST(Io, CurvesRoundTripIsByteIdentical) {
  const std::vector<int> ns = {1, 10, 100};
  const auto rows = curve_grid(0.5, ns, 0.05);
  std::ostringstream first;
  write_curves_csv(first, rows);
  std::istringstream in(first.str());
  const auto back = read_curves_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].eta, rows[i].eta);
    EXPECT_EQ(back[i].lower, rows[i].lower);
    EXPECT_EQ(back[i].helstrom_block, rows[i].helstrom_block);
  }
  std::ostringstream second;
  write_curves_csv(second, back);
  EXPECT_EQ(first.str(), second.str());
}

TEST(Io, RejectsMalformedCsv) {
  std::istringstream no_header("1,2,3\n");
  EXPECT_THROW(read_curves_csv(no_header), Error);
  std::istringstream short_row(std::string(kCurvesHeader) + "\n0,1,0\n");
  EXPECT_THROW(read_curves_csv(short_row), Error);
}

TEST(Cli, Fidelity) {
  const Outcome o = run_cli({"fidelity", "--eta", "0.5", "--zeta", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("\"fidelity\":0.9659258262890683"), std::string::npos) << o.out;
  const auto j = parse(o);
  EXPECT_EQ(j["schema"], cli::kSchemaVersion);
  EXPECT_EQ(j["command"], "fidelity");
  EXPECT_EQ(j["results"]["fidelity"].get<double>(), 0.9659258262890683);
}

TEST(Cli, FidelityCsv) {
  const Outcome o = run_cli({"--format", "csv", "fidelity", "--eta", "0.5", "--zeta", "0"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "command,eta,zeta,fidelity\nfidelity,0.5,0,0.9659258262890683\n");
}

TEST(Cli, Estimate) {
  const Outcome o = run_cli({"estimate", "--eta", "0", "--n", "100"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = parse(o);
  EXPECT_EQ(j["results"]["qfi"].get<double>(), 100.0);
  EXPECT_EQ(j["results"]["qcrb_variance"].get<double>(), 0.01);

  const Outcome sim = run_cli({"estimate", "--eta", "0.3", "--n", "1000", "sim", "--trials", "2000", "--seed", "5"});
  ASSERT_EQ(sim.code, 0) << sim.err;
  const auto js = parse(sim);
  EXPECT_NEAR(js["results"]["variance_times_qfi"].get<double>(), 1.0, 0.1);
  EXPECT_EQ(sim.out, run_cli({"estimate", "--eta", "0.3", "--n", "1000", "sim", "--trials", "2000", "--seed", "5"}).out);
}

TEST(Cli, InfiniteValuesAreStrings) {
  const Outcome o = run_cli({"relent", "--eta", "0", "--zeta", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse(o)["results"]["relative_entropy"], "inf");
}

TEST(Cli, Qcb) {
  const auto j = parse(run_cli({"qcb", "--eta", "0.5", "--zeta", "-0.5"}));
  EXPECT_NEAR(j["results"]["q"].get<double>(), 0.8660254037844386, 1e-15);
  EXPECT_EQ(j["results"]["s_kind"], "interior");
  const auto iso = parse(run_cli({"qcb", "--isotropic", "--alpha", "2", "--beta", "1", "--d", "2"}));
  EXPECT_EQ(iso["results"]["s_kind"], "left_limit");
  EXPECT_EQ(run_cli({"qcb", "--isotropic", "--alpha", "2"}).code, 1);
  EXPECT_EQ(run_cli({"qcb", "--eta", "0.5"}).code, 1);
}

TEST(Cli, Discriminate) {
  const Outcome o = run_cli({"discriminate", "--eta", "0.5", "--zeta", "0", "--d", "2", "--n", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto r = parse(o)["results"];
  for (const char* key : {"lower", "qcb_upper", "fid_upper", "helstrom_block"}) EXPECT_TRUE(r.contains(key)) << key;
  EXPECT_TRUE(r["ordered"].get<bool>());
  EXPECT_LE(r["lower"].get<double>(), r["helstrom_block"].get<double>());
  EXPECT_LE(r["qcb_upper"].get<double>(), r["fid_upper"].get<double>());
}

TEST(Cli, CurvesCsv) {
  const Outcome o = run_cli({"curves", "--zeta", "0", "--n", "1,10", "--step", "0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ostringstream expected;
  const std::vector<int> ns = {1, 10};
  write_curves_csv(expected, curve_grid(0.0, ns, 0.5));
  EXPECT_EQ(o.out, expected.str());
  EXPECT_EQ(run_cli({"curves", "--zeta", "0", "--step", "0.3"}).code, 1);
  const Outcome json = run_cli({"--format", "json", "curves", "--zeta", "0", "--n", "1", "--step", "1"});
  ASSERT_EQ(json.code, 0);
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 3u);
}

TEST(Cli, TeleportCheck) {
  const Outcome o = run_cli({"teleport-check", "--d", "3", "--eta", "0.5", "--samples", "4"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(parse(o)["results"]["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"nonsense"}).code, 1);
  EXPECT_EQ(run_cli({"fidelity", "--eta", "0.5"}).code, 1);
  EXPECT_EQ(run_cli({"fidelity", "--eta", "2", "--zeta", "0"}).code, 1);
  EXPECT_EQ(run_cli({"fidelity", "--eta", "abc", "--zeta", "0"}).code, 1);
  EXPECT_EQ(run_cli({"--format", "xml", "fidelity", "--eta", "0", "--zeta", "0"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--dims", "1..3"}).code, 1);
}

TEST(Cli, VerifySmallGrid) {
  const std::vector<std::string> base = {"verify", "--grid", "0.5", "--dims", "2,3", "--copies", "200", "--trials", "4000"};
  const Outcome ok = run_cli(base);
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(parse(ok)["results"]["failed"].empty());

  std::vector<std::string> tight = base;
  tight.insert(tight.end(), {"--tol-scale", "1e-30"});
  const Outcome bad = run_cli(tight);
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(parse(bad)["results"]["failed"].empty());
  EXPECT_NE(bad.err.find("verification failed"), std::string::npos);
}

}  // namespace
}  // namespace wernerlab
