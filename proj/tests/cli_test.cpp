// Copyright 2026 The MERLAN Tools Authors
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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "merlan/cli.hpp"
#include "merlan/json_io.hpp"
#include "test_support.hpp"

namespace merlan {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("merlan_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    house_ = write("house.mln", testing::read_data("house.mln"));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string snapshot_file(const std::string& name, const std::string& detections) {
    return write(name, R"({"detections": [)" + detections + "]}");
  }

  fs::path dir_;
  std::string house_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kSmoke = R"({"id": "s", "entity": "smoke", "kind": "concrete", "modality": "image", "confidence": 0.6})";

TEST_F(CliTest, CheckOk) {
  EXPECT_EQ(run({"check", house_}), cli::kOk);
  EXPECT_NE(out_.str().find("ok (0 error(s), 0 warning(s))"), std::string::npos);
}

TEST_F(CliTest, CheckJson) {
  EXPECT_EQ(run({"--json", "check", house_}), cli::kOk);
  auto doc = Json::parse(out_.str());
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["ok"], true);
  EXPECT_TRUE(doc["diagnostics"].empty());
}

TEST_F(CliTest, CheckSemanticErrorExitsOne) {
  auto path = write("bad.mln",
                    "ENTITIES:\n  CONCRETE:\n    dog\nREQUIREMENTS:\n  r:\n    CONCRETE [5..2]\n      - entity: dog\n"
                    "      - name: \"d\"\n      - modality: \"image\"\n      - confidence: 0.5\n");
  EXPECT_EQ(run({"check", path}), cli::kSemanticError);
  EXPECT_NE(out_.str().find(":6:5: error[E005]"), std::string::npos) << out_.str();
  EXPECT_EQ(run({"--json", "check", path}), cli::kSemanticError);
  auto doc = Json::parse(out_.str());
  EXPECT_EQ(doc["diagnostics"][0]["code"], "E005");
  EXPECT_EQ(doc["diagnostics"][0]["line"], 6);
}

TEST_F(CliTest, CheckParseAndLexErrorsExitTwo) {
  EXPECT_EQ(run({"check", write("p.mln", "REQUIREMENTS:\n  r:\n    AND\n")}), cli::kInputError);
  EXPECT_NE(out_.str().find("error[P001]: AND requires at least one child requirement"), std::string::npos);
  EXPECT_EQ(run({"--json", "check", write("l.mln", "ENTITIES:\n  $\n")}), cli::kInputError);
  EXPECT_EQ(Json::parse(out_.str())["diagnostics"][0]["code"], "L001");
}

TEST_F(CliTest, MissingFileAndUsage) {
  EXPECT_EQ(run({"check", (dir_ / "nope.mln").string()}), cli::kInputError);
  EXPECT_EQ(run({}), cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}), cli::kInputError);
  EXPECT_EQ(run({"--help"}), cli::kOk);
}

TEST_F(CliTest, WarningsWithModalityOverride) {
  auto path = write("w.mln",
                    "ENTITIES:\n  CONCRETE:\n    dog\nREQUIREMENTS:\n  r:\n    CONCRETE\n      - entity: dog\n"
                    "      - name: \"d\"\n      - modality: \"thermal\"\n      - confidence: 0.5\n");
  EXPECT_EQ(run({"check", path}), cli::kOk);
  EXPECT_NE(out_.str().find("warning[W001]"), std::string::npos);
  EXPECT_EQ(run({"--modalities", "thermal", "check", path}), cli::kOk);
  EXPECT_EQ(out_.str().find("W001"), std::string::npos);
  auto config = write("merlan.conf", "modalities = thermal\n");
  EXPECT_EQ(run({"--config", config, "check", path}), cli::kOk);
  EXPECT_EQ(out_.str().find("W001"), std::string::npos);
  EXPECT_EQ(run({"--config", write("bad.conf", "nonsense\n"), "check", path}), cli::kInputError);
}

TEST_F(CliTest, EvalSingleSnapshot) {
  auto snap = snapshot_file("s.json", kSmoke);
  EXPECT_EQ(run({"eval", house_, snap}), cli::kOk);
  auto doc = Json::parse(out_.str());
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["results"]["requirement1"]["satisfied"], true);
  EXPECT_EQ(doc["results"]["requirement2"]["satisfied"], false);
  EXPECT_FALSE(doc["results"]["requirement1"].contains("trace"));
}

TEST_F(CliTest, EvalRequirementTraceAndFailFlag) {
  auto snap = snapshot_file("s.json", kSmoke);
  EXPECT_EQ(run({"eval", house_, snap, "--requirement", "requirement2", "--trace"}), cli::kOk);
  auto doc = Json::parse(out_.str());
  EXPECT_FALSE(doc["results"].contains("requirement1"));
  EXPECT_EQ(doc["results"]["requirement2"]["trace"]["op"], "OR");
  EXPECT_EQ(run({"eval", house_, snap, "--fail-unsatisfied"}), cli::kUnsatisfied);
  EXPECT_EQ(run({"eval", house_, snap, "--requirement", "requirement1", "--fail-unsatisfied"}), cli::kOk);
  EXPECT_EQ(run({"eval", house_, snap, "--requirement", "nope"}), cli::kSemanticError);
}

TEST_F(CliTest, EvalManySnapshotsAndJobs) {
  auto a = snapshot_file("a.json", kSmoke);
  auto b = snapshot_file("b.json", "");
  EXPECT_EQ(run({"eval", house_, a, b, "--jobs", "2"}), cli::kOk);
  auto doc = Json::parse(out_.str());
  ASSERT_EQ(doc["snapshots"].size(), 2u);
  EXPECT_EQ(doc["snapshots"][0]["snapshot"], a);
  EXPECT_EQ(doc["snapshots"][0]["results"]["requirement1"]["satisfied"], true);
  EXPECT_EQ(doc["snapshots"][1]["results"]["requirement1"]["satisfied"], false);
}

TEST_F(CliTest, EvalBadSnapshotExitsTwo) {
  auto bad = write("bad.json", R"({"detections": [{"id": "a"}]})");
  EXPECT_EQ(run({"eval", house_, bad}), cli::kInputError);
  EXPECT_NE(err_.str().find("detections[0].entity"), std::string::npos);
}

TEST_F(CliTest, GenStdoutFileAndManifest) {
  EXPECT_EQ(run({"gen", house_}), cli::kOk);
  EXPECT_EQ(out_.str(), testing::read_data("house_agent.py.golden"));
  auto py = (dir_ / "agent.py").string();
  auto manifest = (dir_ / "agent.json").string();
  EXPECT_EQ(run({"gen", house_, "--out", py, "--manifest", manifest}), cli::kOk);
  EXPECT_EQ(slurp(py), testing::read_data("house_agent.py.golden"));
  auto doc = Json::parse(slurp(manifest));
  EXPECT_EQ(doc["requirements"].size(), 2u);
  EXPECT_EQ(doc["entities"][6]["name"], "empty_house");
}

TEST_F(CliTest, GenRejectsInvalidSpec) {
  auto path = write("bad.mln", "REQUIREMENTS:\n  r:\n    CONCRETE\n      - entity: ghost\n");
  EXPECT_EQ(run({"gen", path}), cli::kSemanticError);
  EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, FmtCheckStdoutAndInPlace) {
  EXPECT_EQ(run({"fmt", "--check", house_}), cli::kFormatDiff);
  EXPECT_NE(out_.str().find("-    car:\n+    car\n"), std::string::npos) << out_.str();
  EXPECT_EQ(run({"fmt", "--stdout", house_}), cli::kOk);
  auto formatted = out_.str();
  EXPECT_EQ(slurp(house_), testing::read_data("house.mln"));  // untouched

  EXPECT_EQ(run({"fmt", house_}), cli::kOk);
  EXPECT_EQ(slurp(house_), formatted);
  EXPECT_EQ(run({"fmt", "--check", house_}), cli::kOk);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_EQ(run({"fmt", house_}), cli::kOk);  // idempotent
  EXPECT_EQ(slurp(house_), formatted);
}

TEST_F(CliTest, FmtKeepsCommentedFilesUnlessForced) {
  auto path = write("c.mln", "// note\nENTITIES:\n    CONCRETE:\n        dog\n");
  EXPECT_EQ(run({"fmt", path}), cli::kInputError);
  EXPECT_EQ(slurp(path), "// note\nENTITIES:\n    CONCRETE:\n        dog\n");
  EXPECT_EQ(run({"fmt", "--force", path}), cli::kOk);
  EXPECT_EQ(slurp(path), "ENTITIES:\n  CONCRETE:\n    dog\n");
}

TEST_F(CliTest, FmtParseErrorExitsTwo) {
  EXPECT_EQ(run({"fmt", write("p.mln", "ENTITIES:\n  dog\n")}), cli::kInputError);
}

TEST(LineDiff, EmptyWhenEqual) {
  EXPECT_EQ(cli::line_diff("a\n", "a\n", "x"), "");
  EXPECT_EQ(cli::line_diff("a\nb\n", "a\nc\n", "x"), "--- x\n+++ x (formatted)\n a\n-b\n+c\n");
}

}  // namespace
}  // namespace merlan
