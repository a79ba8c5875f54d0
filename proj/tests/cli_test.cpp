// Copyright 2026 The recforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recforge/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"
#include "recforge/config.hpp"
#include "recforge/dataset.hpp"
#include "recforge/png_io.hpp"
#include "support.hpp"

namespace recforge {
namespace {

using testing::TempDir;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "recforge");
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string small_config(const TempDir& dir) {
  const auto path = dir / "small.xml";
  testing::write_file(path, testing::kSmallConfig);
  return path.string();
}

TEST(Cli, HelpListsFlagsAndExitsZero) {
  const std::map<std::string, std::vector<std::string>> flags{
      {"extract-bg", {"--out", "--workers"}},
      {"generate", {"--pages", "--seed", "--out", "--backgrounds", "--font-dir", "--p-cont", "--workers"}},
      {"augment", {"--variants", "--rotation", "--salt-pepper", "--no-originals", "--seed", "--workers"}},
      {"preprocess", {"--window", "--k", "--R", "--workers", "--out"}},
      {"split", {"--mode", "--folds", "--sizes", "--seed", "--out"}},
      {"evaluate", {"--report", "--group"}},
  };
  const Result top = cli({"--help"});
  EXPECT_EQ(top.status, 0);
  for (const auto& [cmd, names] : flags) {
    EXPECT_NE(top.out.find(cmd), std::string::npos) << cmd;
    const Result r = cli({cmd, "--help"});
    EXPECT_EQ(r.status, 0) << cmd;
    for (const auto& name : names) EXPECT_NE(r.out.find(name), std::string::npos) << cmd << " " << name;
  }
}

TEST(Cli, BadInvocationsFailWithDiagnostics) {
  TempDir dir;
  EXPECT_NE(cli({}).status, 0);
  Result r = cli({"generate", small_config(dir), "--pages", "1", "--bogus"});
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
  r = cli({"generate", (dir / "missing.xml").string(), "--pages", "1"});
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
  testing::write_file(dir / "bad.xml", "<page width=\"1\" height=\"1\">\n<oops/>\n</page>");
  r = cli({"generate", (dir / "bad.xml").string(), "--pages", "1", "--out", (dir / "o").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  r = cli({"split", (dir / "missing.jsonl").string(), "--mode", "cv5"});
  EXPECT_NE(r.status, 0);
  r = cli({"split", small_config(dir), "--mode", "cv7"});
  EXPECT_NE(r.status, 0);
}

TEST(Cli, GenerateIsDeterministicAndMatchesLibrary) {
  TempDir dir;
  const std::string config = small_config(dir);
  for (const char* out : {"a", "b"}) {
    const Result r = cli({"generate", config, "--pages", "2", "--seed", "7", "--out", (dir / out).string()});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto summary = nlohmann::json::parse(r.out);
    EXPECT_EQ(summary["pages"], 2);
  }
  EXPECT_EQ(testing::read_file(dir / "a/pages/page_000000.png"), testing::read_file(dir / "b/pages/page_000000.png"));
  EXPECT_EQ(testing::read_file(dir / "a/manifest.jsonl"), testing::read_file(dir / "b/manifest.jsonl"));
  EXPECT_TRUE(std::filesystem::exists(dir / "a/generate_summary.json"));

  const PageTemplate t = load_config(config);
  const auto res = SynthesisResources::load(t, default_resource_paths());
  generate_dataset(t, 2, res, 7, dir / "lib");
  EXPECT_EQ(testing::read_file(dir / "a/pages/page_000001.png"), testing::read_file(dir / "lib/pages/page_000001.png"));
  EXPECT_EQ(testing::read_file(dir / "a/manifest.jsonl"), testing::read_file(dir / "lib/manifest.jsonl"));
}

TEST(Cli, PipelineAugmentPreprocessSplitEvaluate) {
  TempDir dir;
  const std::string data = (dir / "data").string();
  ASSERT_EQ(cli({"generate", small_config(dir), "--pages", "10", "--out", data, "--workers", "2"}).status, 0);

  Result r = cli({"augment", data + "/manifest.jsonl", "--variants", "2", "--out", (dir / "aug").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["output_pages"], 30);
  EXPECT_EQ(read_manifest(dir / "aug/manifest.jsonl").size(), 30u);

  r = cli({"preprocess", data + "/manifest.jsonl", "--out", (dir / "pre").string(), "--window", "15"});
  ASSERT_EQ(r.status, 0) << r.err;
  const RasterPage pre = read_png(dir / "pre/pages/page_000000.png");
  EXPECT_EQ(pre.width(), 256);
  EXPECT_EQ(pre.height(), 366);

  r = cli({"split", data + "/manifest.jsonl", "--mode", "cv5", "--out", (dir / "cv").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const Manifest cv = read_manifest(dir / "cv/split.jsonl");
  ASSERT_EQ(cv.size(), 10u);
  for (const auto& e : cv.entries) {
    ASSERT_TRUE(e.fold.has_value());
    EXPECT_TRUE(std::filesystem::exists(cv.resolve(e))) << e.path;
  }

  r = cli({"split", data + "/manifest.jsonl", "--mode", "benchmark"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("200"), std::string::npos) << r.err;
  r = cli({"split", data + "/manifest.jsonl", "--mode", "benchmark", "--sizes", "6,2,2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["groups"]["train"]["pages"], 6);

  std::vector<Prediction> perfect;
  for (const auto& e : cv.entries) perfect.push_back({e.page_id, static_cast<double>(e.record_count)});
  write_predictions(dir / "preds.jsonl", perfect);
  r = cli({"evaluate", (dir / "cv/split.jsonl").string(), (dir / "preds.jsonl").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("Average"), std::string::npos);
  const auto report = nlohmann::json::parse(testing::read_file(dir / "preds.report.json"));
  EXPECT_EQ(report["overall"]["accuracy"], 1.0);
  EXPECT_EQ(report["overall"]["error"], 0.0);
  EXPECT_EQ(report["overall"]["score"], 0.0);
  EXPECT_EQ(report["rows"].size(), 5u);

  perfect.pop_back();
  write_predictions(dir / "short.jsonl", perfect);
  r = cli({"evaluate", (dir / "cv/split.jsonl").string(), (dir / "short.jsonl").string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("no prediction"), std::string::npos);
}

TEST(Cli, ExtractBackgrounds) {
  TempDir dir;
  write_png(dir / "scan.png", testing::stroke_image(80, 60, 200, 20));
  const Result r = cli({"extract-bg", dir.path().string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(read_png(dir / "scan.bg.png"), RasterPage(80, 60, 200));
  EXPECT_EQ(nlohmann::json::parse(r.out)["written"].size(), 1u);
}

TEST(Cli, BinaryExitStatus) {
  const std::string bin = RECFORGE_CLI_PATH;
  EXPECT_EQ(std::system((bin + " --help > /dev/null").c_str()), 0);
  EXPECT_EQ(std::system((bin + " evaluate --help > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " frobnicate > /dev/null 2>&1").c_str()), 0);
}

}  // namespace
}  // namespace recforge
