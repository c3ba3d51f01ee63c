#include <gtest/gtest.h>

#include "golden_cases.hpp"

namespace fs = std::filesystem;
using namespace mumford;
using golden::Captured;
using golden::invoke;
using golden::read_file;
using golden::scratch_dir;

class Golden : public ::testing::TestWithParam<golden::Case> {};

TEST_P(Golden, ReportIsByteIdentical) {
  const golden::Case& c = GetParam();
  const Captured first = invoke(c.args);
  EXPECT_EQ(first.code, c.exit_code) << first.text;
  EXPECT_TRUE(golden::compare_or_update(golden::golden_path(c.name + ".txt"), first.text))
      << c.name << ".txt differs or is missing; regenerate with MUMFORD_UPDATE_GOLDEN=1\n" << first.text;
  if (c.writes_svg) {
    const fs::path svg = scratch_dir() / (c.name + ".svg");
    ASSERT_TRUE(fs::exists(svg));
    const std::string contents = read_file(svg);
    EXPECT_TRUE(golden::compare_or_update(golden::golden_path(c.name + ".svg"), contents)) << c.name << ".svg";
    fs::remove(svg);
  }
  // Stable across runs.
  EXPECT_EQ(invoke(c.args).text, first.text);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden::cases()),
                         [](const auto& info) { return info.param.name; });

TEST(CliReports, KeyLines) {
  EXPECT_NE(invoke({"chi", "quadric-cone.ws", "OL"}).text.find("\nchi = 2\n"), std::string::npos);
  const Captured bad = invoke({"bogomolov", "p2.ws", "badclass"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.text.find("\nviolated, margin = -2\n"), std::string::npos);
}

TEST(CliReports, WallSvgContainsTheLineBEqualsZero) {
  const fs::path svg = scratch_dir() / "line_walls.svg";
  const Captured c = invoke({"walls", "p2.ws", "O", "point", "--window", "-3:3:0.1:3", "--out", svg.string()});
  ASSERT_EQ(c.code, 0) << c.text;
  EXPECT_NE(c.text.find("vertical-line b = 0"), std::string::npos);
  const std::string s = read_file(svg);
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("O|point"), std::string::npos);
  fs::remove(svg);
}

TEST(CliErrors, MessagesNameTheProblem) {
  EXPECT_NE(invoke({"chi", "bad-gram.ws", "O"}).text.find("entry [0][1] = 1 but [1][0] = 2"), std::string::npos);
  EXPECT_NE(invoke({"chi", "unresolved.ws", "O1"}).text.find("unresolved reference 'Hplus'"), std::string::npos);
}

TEST(Workspace, RoundTrip) {
  for (const auto& entry : fs::directory_iterator(MUMFORD_FIXTURES)) {
    const std::string name = entry.path().filename().string();
    if (name == "bad-gram.ws" || name == "unresolved.ws") continue;
    const cli::WorkspaceDocument doc = cli::parse_workspace(entry.path().string());
    const auto once = cli::serialize_workspace(doc);
    const cli::WorkspaceDocument again = cli::parse_workspace_json(once);
    EXPECT_TRUE(cli::same_document(doc, again)) << name;
    EXPECT_EQ(cli::serialize_workspace(again).dump(2), once.dump(2)) << name;
  }
}

TEST(Workspace, ParseErrors) {
  EXPECT_THROW(cli::parse_workspace_text("{"), DataError);
  EXPECT_THROW(cli::parse_workspace_text("[]"), DataError);
  EXPECT_THROW(cli::parse_workspace_text(R"({"divisors": {}, "sheaves": {}})"), DataError);
  EXPECT_THROW(cli::parse_workspace("does-not-exist.ws"), DataError);
}

TEST(Window, Parsing) {
  const auto w = cli::parse_window("-3:3:0.1:3");
  EXPECT_EQ(w.b_min, -3);
  EXPECT_EQ(w.t_min, 0.1);
  EXPECT_THROW(cli::parse_window("1:2:3"), UsageError);
  EXPECT_THROW(cli::parse_window("1:2:3:x"), UsageError);
  EXPECT_THROW(cli::parse_window("0:1:-1:1"), UsageError);
}
