#include <algorithm>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "ade/shell.hpp"

using namespace ade;

namespace {

const std::string data_dir = ADE_DATA_DIR;

std::string write_temp(const std::string& name, const std::string& text)
{
  const auto path = std::filesystem::temp_directory_path() / ("ade_shell_" + name);
  std::ofstream(path) << text;
  return path.string();
}

CommandRequest single(Command c, Family f, std::string n, std::string m)
{
  CommandRequest r;
  r.command = c;
  r.families = {f};
  r.n = std::move(n);
  r.m = std::move(m);
  return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Tokens, Parse)
{
  EXPECT_EQ(parse_sing_token("D:4:m=4"), SingularitySpec::make(Family::D, 4, 4));
  EXPECT_EQ(parse_sing_token("E6:m=5"), SingularitySpec::make(Family::E6, 5));
  EXPECT_EQ(parse_sing_token("E7:7:m=3"), SingularitySpec::make(Family::E7, 3));
  EXPECT_THROW(parse_sing_token("D:4"), UsageError);
  EXPECT_THROW(parse_sing_token("A:m=4"), UsageError);
  EXPECT_THROW(parse_sing_token("Q:1:m=4"), UsageError);
  EXPECT_THROW(parse_sing_token("D:3:m=4"), UsageError);
  EXPECT_THROW(parse_sing_token("A:1:m=x"), UsageError);
}

TEST(Ranges, Parse)
{
  EXPECT_EQ(parse_range("7").lo, 7);
  EXPECT_EQ(parse_range("7").hi, 7);
  EXPECT_EQ(parse_range("1..9").hi, 9);
  EXPECT_TRUE(parse_range("5..1").empty());
  EXPECT_THROW(parse_range("1..x"), UsageError);
  EXPECT_THROW(parse_range(""), UsageError);
}

TEST(Contribution, D4BothRoutes)
{
  auto req = single(Command::contribution, Family::D, "4", "4");
  req.format = Format::json;
  const auto r = run(req);
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["contribution"]["num"], Json::parse(R"(["1", "2"])"));
  EXPECT_EQ(j["euler"], "3");
  EXPECT_EQ(j["is_polynomial"], true);
  EXPECT_EQ(j["checks"]["routes_agree"], "pass");
}

TEST(Contribution, A1StrataOnly)
{
  auto req = single(Command::contribution, Family::A, "1", "5");
  req.method = Method::strata;
  const auto r = run(req);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("contribution: (w^3 + w^2 + w + 1)/(w^2 + w + 1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("euler: 4/3"), std::string::npos);
  EXPECT_NE(r.out.find("routes_agree=n/a"), std::string::npos);
}

TEST(Contribution, E8Surface)
{
  const auto r = run(single(Command::contribution, Family::E8, "8", "3"));
  EXPECT_EQ(r.exit_code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("contribution: 8w + 1"), std::string::npos);
}

TEST(Contribution, Formats)
{
  auto req = single(Command::contribution, Family::E7, "7", "4");
  req.format = Format::latex;
  EXPECT_NE(run(req).out.find("\\frac"), std::string::npos);
  req.format = Format::csv;
  const auto csv = run(req).out;
  EXPECT_EQ(count_lines(csv), 2u);
  EXPECT_EQ(csv.rfind("source,contribution,euler,is_polynomial", 0), 0u);
}

TEST(Contribution, UsageErrors)
{
  EXPECT_EQ(run(single(Command::contribution, Family::D, "3", "4")).exit_code, kExitUsage);
  EXPECT_EQ(run(single(Command::contribution, Family::A, "1..3", "4")).exit_code, kExitUsage);
  CommandRequest none;
  none.command = Command::contribution;
  EXPECT_EQ(run(none).exit_code, kExitUsage);
  auto closed_file = single(Command::contribution, Family::A, "1", "5");
  closed_file.resolution_file = data_dir + "/a1_m5_resolution.json";
  closed_file.method = Method::closed;
  EXPECT_EQ(run(closed_file).exit_code, kExitUsage);
}

TEST(Contribution, ResolutionFile)
{
  CommandRequest req;
  req.command = Command::contribution;
  req.resolution_file = data_dir + "/a1_m5_resolution.json";
  req.format = Format::json;
  const auto r = run(req);
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["euler"], "4/3");
  EXPECT_EQ(j["checks"]["euler_consistency"], "pass");

  req.resolution_file = write_temp("dup.json", R"({"divisors": [{"label": "E", "discrepancy": 1}],
    "strata": [{"divisors": ["E"], "hodge": ["1"]}, {"divisors": ["E"], "hodge": ["1"]}]})");
  const auto bad = run(req);
  EXPECT_EQ(bad.exit_code, kExitUsage);
  EXPECT_NE(bad.err.find("duplicate stratum"), std::string::npos) << bad.err;
}

TEST(RouteMismatch, ReportsBothForms)
{
  detail::RouteOutcome o;
  o.strata = RationalFunction(Polynomial{1, 2});
  o.closed = RationalFunction(Polynomial{1, 3});
  ASSERT_FALSE(o.agree());
  const auto r = detail::route_mismatch(SingularitySpec::make(Family::D, 4, 4), o);
  EXPECT_EQ(r.exit_code, kExitCheckFailed);
  EXPECT_NE(r.err.find(R"("num":["1","2"])"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find(R"("num":["1","3"])"), std::string::npos) << r.err;
}

TEST(Euler, SpotValues)
{
  auto req = single(Command::euler, Family::D, "4", "4");
  req.format = Format::json;
  auto j = Json::parse(run(req).out);
  EXPECT_EQ(j["euler"], "3");
  EXPECT_EQ(j["consistent"], "pass");
  req = single(Command::euler, Family::A, "1", "5");
  EXPECT_NE(run(req).out.find("euler: 4/3"), std::string::npos);
}

TEST(Classify, Verdicts)
{
  auto r = run(single(Command::classify, Family::A, "5", "4"));
  EXPECT_EQ(r.out, "A5,m=4: polynomial\n");
  r = run(single(Command::classify, Family::D, "4", "5"));
  EXPECT_EQ(r.out, "D4,m=5: not polynomial\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  auto req = single(Command::classify, Family::E6, "6", "3");
  req.format = Format::json;
  EXPECT_EQ(Json::parse(run(req).out)["consistent"], "n/a");
  EXPECT_EQ(run(req).exit_code, kExitOk);
}

TEST(Assemble, ThreefoldWithThreeD4Points)
{
  CommandRequest req;
  req.command = Command::assemble;
  req.smooth_part = data_dir + "/smooth_example.txt";
  req.sing_tokens = {"D:4:m=4", "D:4:m=4", "D:4:m=4"};
  req.projective = true;
  req.dim = 3;
  req.format = Format::json;
  const auto r = run(req);
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["contribution"]["num"], Json::parse(R"(["1", "5", "5", "1"])"));
  EXPECT_EQ(j["hodge_numbers"], Json::parse("[1, 5, 5, 1]"));
  EXPECT_EQ(j["checks"]["duality"], "pass");
  EXPECT_EQ(j["checks"]["nonnegativity"], "pass");

  // the same list from a file
  req.sing_tokens = {"D:4:m=4"};
  req.sing_file = data_dir + "/three_d4.json";
  EXPECT_EQ(Json::parse(run(req).out)["contribution"], j["contribution"]);
}

TEST(Assemble, SmoothOnly)
{
  CommandRequest req;
  req.command = Command::assemble;
  req.smooth_part = write_temp("smooth5.txt", "w^5 + 1");
  req.projective = true;
  req.dim = 5;
  const auto r = run(req);
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("duality=pass"), std::string::npos);
}

TEST(Assemble, Rejections)
{
  CommandRequest req;
  req.command = Command::assemble;
  req.smooth_part = write_temp("smooth_deg5.txt", "w^5 + w + 1");
  req.dim = 3;
  auto r = run(req);
  EXPECT_EQ(r.exit_code, kExitUsage);
  EXPECT_NE(r.err.find("degree 5"), std::string::npos);

  req.smooth_part = data_dir + "/smooth_example.txt";
  req.sing_tokens = {"A:1:m=5"};
  EXPECT_EQ(run(req).exit_code, kExitUsage);

  req.sing_tokens = {};
  req.dim.reset();
  req.projective = true;
  EXPECT_EQ(run(req).exit_code, kExitUsage);

  req.projective = false;
  req.smooth_part = write_temp("smooth_bad.txt", "w^3 +\n  2y");
  r = run(req);
  EXPECT_EQ(r.exit_code, kExitUsage);
  EXPECT_NE(r.err.find(":2:4"), std::string::npos) << r.err;

  req.smooth_part = data_dir + "/smooth_example.txt";
  req.sing_file = write_temp("sing_bad.json", R"([{"family": "D", "n": 3, "m": 4}])");
  r = run(req);
  EXPECT_EQ(r.exit_code, kExitUsage);
  EXPECT_NE(r.err.find("#/0"), std::string::npos) << r.err;
}

TEST(Assemble, FailedVerdictExitsOne)
{
  CommandRequest req;
  req.command = Command::assemble;
  req.smooth_part = write_temp("smooth_neg.txt", "w^2 - 3w + 1");
  req.projective = true;
  req.dim = 2;
  const auto r = run(req);
  EXPECT_EQ(r.exit_code, kExitCheckFailed);
  EXPECT_NE(r.out.find("nonnegativity=fail"), std::string::npos);
}

TEST(Table, AGrid)
{
  const auto r = run(single(Command::table, Family::A, "1..9", "3..6"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(count_lines(r.out), 37u);
  EXPECT_EQ(r.out.find(",fail"), std::string::npos);
}

TEST(Table, SingleRow)
{
  auto req = single(Command::table, Family::D, "4..4", "4..4");
  const auto r = run(req);
  EXPECT_EQ(r.out, "family,n,m,contribution,euler,is_polynomial,routes\nD,4,4,2w + 1,3,true,pass\n");
  req.format = Format::json;
  const Json j = Json::parse(run(req).out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["routes"], "pass");
}

TEST(Table, EmptyRangeIsUsageError)
{
  EXPECT_EQ(run(single(Command::table, Family::A, "5..1", "3")).exit_code, kExitUsage);
  EXPECT_EQ(run(single(Command::table, Family::A, "1", "6..3")).exit_code, kExitUsage);
}

TEST(Table, RangesClipToEachFamily)
{
  CommandRequest req = single(Command::table, Family::A, "1..5", "4");
  req.families = {Family::A, Family::D};
  const auto r = run(req);
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 5 + 2);
  EXPECT_NE(r.out.find("D,4,4,2w + 1,"), std::string::npos);
  EXPECT_EQ(r.out.find("D,3,"), std::string::npos);
  EXPECT_EQ(run(single(Command::table, Family::D, "1..3", "4")).exit_code, kExitUsage);
  EXPECT_EQ(run(single(Command::table, Family::A, "1..3", "2..4")).exit_code, kExitUsage);
}

TEST(Table, DeterministicAcrossFamilies)
{
  CommandRequest req = single(Command::table, Family::E8, "2..5", "3..5");
  req.families = {Family::E8, Family::A, Family::E6};
  const auto a = run(req), b = run(req);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("A,2,3"), a.out.find('\n') + 1);
  EXPECT_LT(a.out.find("E6,6,3"), a.out.find("E8,8,3"));
}

TEST(Verify, SmallGrid)
{
  const auto r = run(single(Command::verify, Family::D, "4..8", "3..7"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "25/25 cells pass\n");
}
