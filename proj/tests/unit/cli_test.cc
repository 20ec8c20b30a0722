// Copyright 2026 The Rhesis Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string Data(const std::string& name) {
  return std::string(RHESIS_TEST_DATA_DIR) + "/" + name;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rhesis_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI; stdout goes to out.txt, stderr to err.txt.
  int Run(const std::string& args) {
    std::string cmd = std::string("env -u RHESIS_CONFIG ") + RHESIS_CLI_PATH +
                      " " + args + " >" + (dir_ / "out.txt").string() +
                      " 2>" + (dir_ / "err.txt").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string Out() { return Slurp(dir_ / "out.txt"); }
  std::string Err() { return Slurp(dir_ / "err.txt"); }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SegmentCascadeIsDeterministic) {
  ASSERT_EQ(Run("segment --input " + Data("fixture_fr.conllu") + " --out " +
                Path("a.rhz")),
            0)
      << Err();
  ASSERT_EQ(Run("segment --input " + Data("fixture_fr.conllu") + " --out " +
                Path("b.rhz")),
            0);
  EXPECT_FALSE(Slurp(Path("a.rhz")).empty());
  EXPECT_EQ(Slurp(Path("a.rhz")), Slurp(Path("b.rhz")));
  EXPECT_NE(Err().find("effective config"), std::string::npos);
}

TEST_F(CliTest, TreeWithoutWeightsIsUsageError) {
  EXPECT_EQ(Run("segment --method tree --input " + Data("fixture_fr.conllu")),
            1);
  EXPECT_EQ(Run("segment --method scores --input " +
                Data("fixture_fr.conllu")),
            1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run(""), 1);
  EXPECT_EQ(Run("segment"), 1);
  EXPECT_EQ(Run("segment --input x --bogus"), 1);
  EXPECT_EQ(Run("segment --input x --method magic"), 1);
  EXPECT_FALSE(Err().empty());
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(Run("segment --input " + Path("missing.conllu")), 2);
  std::ofstream(Path("bad.conllu")) << "1\ta\t_\tX\t_\t_\t99\troot\t_\t_\n\n";
  EXPECT_EQ(Run("segment --input " + Path("bad.conllu")), 2);
  EXPECT_NE(Err().find("structural error"), std::string::npos) << Err();
  std::ofstream(Path("bad.rhz")) << "Pas du tout\n";
  EXPECT_EQ(Run("eval --auto " + Path("bad.rhz") + " --gold " +
                Data("fixture_fr.rhz") + " --conllu " +
                Data("fixture_fr.conllu")),
            2);
}

TEST_F(CliTest, EvalIdenticalIsPerfect) {
  ASSERT_EQ(Run("eval --auto " + Data("fixture_fr.rhz") + " --gold " +
                Data("fixture_fr.rhz") + " --conllu " +
                Data("fixture_fr.conllu") + " --report " + Path("r.json")),
            0)
      << Err();
  EXPECT_NE(Out().find("100.0%"), std::string::npos) << Out();
  EXPECT_NE(Slurp(Path("r.json")).find("\"weighted_precision\": 1.0"),
            std::string::npos);
}

TEST_F(CliTest, TuneThenTreeSegment) {
  std::ofstream(Path("cfg.json"))
      << R"({"evo": {"population": 8, "generations": 2}})";
  ASSERT_EQ(Run("tune --config " + Path("cfg.json") + " --conllu " +
                Data("fixture_fr.conllu") + " --gold " +
                Data("fixture_fr.rhz") + " --out " + Path("w.json")),
            0)
      << Err();
  EXPECT_NE(Slurp(Path("w.json.manifest.json")).find("\"trace\""),
            std::string::npos);
  ASSERT_EQ(Run("segment --method tree --weights " + Path("w.json") +
                " --format html --input " + Data("fixture_fr.conllu")),
            0)
      << Err();
  EXPECT_NE(Out().find("<span class=\"rhesis\""), std::string::npos);
}

TEST_F(CliTest, ExportAndStats) {
  ASSERT_EQ(Run("export-dataset --conllu " + Data("fixture_fr.conllu") +
                " --gold " + Data("fixture_fr.rhz") + " --negatives 1" +
                " --out " + Path("d.tsv")),
            0)
      << Err();
  EXPECT_EQ(Slurp(Path("d.tsv")).rfind("sentence_id\t", 0), 0u);
  EXPECT_NE(Slurp(Path("d.tsv.manifest.json")).find("\"epochs\": 3"),
            std::string::npos);
  ASSERT_EQ(Run("stats --rhz " + Data("fixture_fr.rhz") + " --conllu " +
                Data("fixture_fr.conllu")),
            0)
      << Err();
  EXPECT_FALSE(Out().empty());
}

TEST_F(CliTest, SpanFlagNarrowsSpan) {
  ASSERT_EQ(Run("segment --span 20 --format records --input " +
                Data("fixture_fr.conllu")),
            0)
      << Err();
  EXPECT_NE(Err().find("\"max_chars\":20"), std::string::npos);
  EXPECT_NE(Err().find("\"target_chars\":20"), std::string::npos);
}

}  // namespace
